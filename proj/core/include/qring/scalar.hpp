#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

#include "qring/params.hpp"

namespace qring {

using Rational = boost::multiprecision::cpp_rational;

// Exact Laurent polynomial in the formal parameters of a ParamSpace, with
// rational coefficients. This is the coefficient ring of every algebra in the
// workbench. Genericity is structural: is_one() only for the literal 1, so
// "q is not a root of unity" holds by construction. Only single-term scalars
// (Laurent units) are invertible.
class Scalar {
public:
    // Exponent vector, one entry per parameter, negative exponents allowed.
    using Exponents = std::vector<int>;

    Scalar() = default;  // zero over the empty space; usable only after rebind
    static Scalar zero(ParamSpacePtr space);
    static Scalar one(ParamSpacePtr space);
    static Scalar from_rational(ParamSpacePtr space, Rational value);
    // Single term value * params^exps.
    static Scalar term(ParamSpacePtr space, Rational value, Exponents exps);
    // The parameter `name` (resolving square aliases, e.g. q -> p^2).
    static Scalar param(ParamSpacePtr space, const std::string& name, int power = 1);

    const ParamSpacePtr& space() const noexcept { return space_; }
    const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const noexcept;
    // A unit of the Laurent ring: exactly one term.
    bool is_unit() const noexcept { return terms_.size() == 1; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);

    // Inverse of a single-term scalar. Throws NonUnitError otherwise.
    Scalar inverse() const;
    // Integer power; negative powers require a unit.
    Scalar pow(int k) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // True if the leading (descending-order) coefficient is negative.
    // Used by printers to pull a minus sign out of a term.
    bool leading_negative() const;

    // Canonical textual form in the expression grammar, e.g. "q - q^-1",
    // "3/2*q^-2". Terms in descending exponent order.
    std::string str() const;

private:
    Scalar(ParamSpacePtr space, std::map<Exponents, Rational> terms)
        : space_(std::move(space)), terms_(std::move(terms)) {}
    void add_term(const Exponents& e, const Rational& v);
    void check_space(const Scalar& o) const;

    ParamSpacePtr space_;
    std::map<Exponents, Rational> terms_;
};

}  // namespace qring
