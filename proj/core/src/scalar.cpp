#include "qring/scalar.hpp"

#include <sstream>

#include "qring/errors.hpp"

namespace qring {

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace

Scalar Scalar::zero(ParamSpacePtr space) { return Scalar(std::move(space), {}); }

Scalar Scalar::one(ParamSpacePtr space) {
    return from_rational(std::move(space), Rational(1));
}

Scalar Scalar::from_rational(ParamSpacePtr space, Rational value) {
    Scalar s(std::move(space), {});
    if (value != 0) s.terms_[Exponents(s.space_->size(), 0)] = std::move(value);
    return s;
}

Scalar Scalar::term(ParamSpacePtr space, Rational value, Exponents exps) {
    if (exps.size() != space->size())
        throw MismatchError("exponent vector length does not match parameter space");
    Scalar s(std::move(space), {});
    if (value != 0) s.terms_[std::move(exps)] = std::move(value);
    return s;
}

Scalar Scalar::param(ParamSpacePtr space, const std::string& name, int power) {
    auto res = space->resolve(name);
    if (!res) throw MismatchError("unknown parameter: " + name);
    Exponents e(space->size(), 0);
    e[res->first] = res->second * power;
    return term(std::move(space), Rational(1), std::move(e));
}

bool Scalar::is_one() const noexcept {
    if (terms_.size() != 1) return false;
    const auto& [e, v] = *terms_.begin();
    if (v != 1) return false;
    for (int k : e)
        if (k != 0) return false;
    return true;
}

void Scalar::check_space(const Scalar& o) const {
    if (!same_space(space_, o.space_))
        throw MismatchError("scalars built over different parameter spaces");
}

void Scalar::add_term(const Exponents& e, const Rational& v) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (v != 0) terms_.emplace(e, v);
        return;
    }
    it->second += v;
    if (it->second == 0) terms_.erase(it);
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    for (auto& [e, v] : r.terms_) v = -v;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_space(o);
    for (const auto& [e, v] : o.terms_) add_term(e, v);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_space(o);
    for (const auto& [e, v] : o.terms_) add_term(e, -v);
    return *this;
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r(*this);
    r += o;
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    Scalar r(*this);
    r -= o;
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_space(o);
    Scalar r(space_, {});
    Exponents sum;
    for (const auto& [e1, v1] : terms_) {
        for (const auto& [e2, v2] : o.terms_) {
            sum = e1;
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += e2[i];
            r.add_term(sum, v1 * v2);
        }
    }
    return r;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    *this = *this * o;
    return *this;
}

Scalar Scalar::inverse() const {
    if (terms_.size() != 1)
        throw NonUnitError("cannot invert a scalar with " +
                           std::to_string(terms_.size()) +
                           " terms; only single-term scalars are units");
    const auto& [e, v] = *terms_.begin();
    Exponents ne(e);
    for (int& k : ne) k = -k;
    return term(space_, Rational(1) / v, std::move(ne));
}

Scalar Scalar::pow(int k) const {
    if (k == 0) return one(space_);
    Scalar base = k > 0 ? *this : inverse();
    int m = k > 0 ? k : -k;
    Scalar r = one(space_);
    for (int i = 0; i < m; ++i) r *= base;
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    return same_space(space_, o.space_) && terms_ == o.terms_;
}

bool Scalar::leading_negative() const {
    if (terms_.empty()) return false;
    return terms_.rbegin()->second < 0;
}

std::string Scalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending exponent order puts e.g. q before q^-1.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, v] = *it;
        Rational av = v < 0 ? Rational(-v) : v;
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += space_->name(i);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            os << rational_str(av);
        } else {
            if (av != 1) os << rational_str(av) << "*";
            os << mono;
        }
    }
    return os.str();
}

}  // namespace qring
