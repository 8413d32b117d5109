#pragma once

#include <string>

#include "qring/presentation.hpp"

namespace qring {

// Element of a presented algebra, stored in PBW normal form: a finite
// scalar-weighted sum of sorted monomials. Immutable value semantics.
class NcPoly {
public:
    NcPoly() = default;

    static NcPoly zero(PresentationPtr p);
    static NcPoly one(PresentationPtr p);
    static NcPoly constant(PresentationPtr p, Scalar s);
    static NcPoly generator(PresentationPtr p, int g);
    // scale * (sorted monomial); the monomial is taken as already normal.
    static NcPoly monomial(PresentationPtr p, Monomial m, Scalar scale);
    // scale * (arbitrary word), straightened.
    static NcPoly from_word(PresentationPtr p, const Word& w, Scalar scale);
    static NcPoly from_terms(PresentationPtr p, TermMap terms);

    const PresentationPtr& presentation() const noexcept { return pres_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t num_terms() const noexcept { return terms_.size(); }

    // The scalar multiple of the empty monomial if the element is a constant.
    // Throws MismatchError if other monomials are present.
    Scalar constant_value() const;

    NcPoly operator-() const;
    NcPoly operator+(const NcPoly& o) const;
    NcPoly operator-(const NcPoly& o) const;
    NcPoly operator*(const NcPoly& o) const;
    NcPoly scaled(const Scalar& s) const;
    NcPoly pow(int k) const;  // k >= 0

    bool operator==(const NcPoly& o) const;
    bool operator!=(const NcPoly& o) const { return !(*this == o); }

    // Canonical textual form in the expression grammar, terms in descending
    // term order, e.g. "X[1,1]*X[2,2] - q*X[1,2]*X[2,1]".
    std::string str() const;

private:
    NcPoly(PresentationPtr p, TermMap t) : pres_(std::move(p)), terms_(std::move(t)) {}
    void check_compatible(const NcPoly& o) const;

    PresentationPtr pres_;
    TermMap terms_;
};

// a*b - b*a.
NcPoly commutator(const NcPoly& a, const NcPoly& b);

}  // namespace qring
