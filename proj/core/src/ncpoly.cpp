#include "qring/ncpoly.hpp"

#include <sstream>

#include "qring/errors.hpp"

namespace qring {

NcPoly NcPoly::zero(PresentationPtr p) { return NcPoly(std::move(p), {}); }

NcPoly NcPoly::one(PresentationPtr p) {
    return constant(p, Scalar::one(p->params()));
}

NcPoly NcPoly::constant(PresentationPtr p, Scalar s) {
    TermMap t;
    if (!s.is_zero()) t.emplace(Monomial(p->num_gens(), 0), std::move(s));
    return NcPoly(std::move(p), std::move(t));
}

NcPoly NcPoly::generator(PresentationPtr p, int g) {
    if (g < 0 || g >= static_cast<int>(p->num_gens()))
        throw MismatchError("generator index out of range");
    Monomial m(p->num_gens(), 0);
    m[g] = 1;
    return monomial(std::move(p), std::move(m), Scalar::one(p->params()));
}

NcPoly NcPoly::monomial(PresentationPtr p, Monomial m, Scalar scale) {
    if (m.size() != p->num_gens())
        throw MismatchError("monomial length does not match generator count");
    for (int e : m)
        if (e < 0) throw MismatchError("negative exponent in monomial");
    TermMap t;
    if (!scale.is_zero()) t.emplace(std::move(m), std::move(scale));
    return NcPoly(std::move(p), std::move(t));
}

NcPoly NcPoly::from_word(PresentationPtr p, const Word& w, Scalar scale) {
    for (int g : w)
        if (g < 0 || g >= static_cast<int>(p->num_gens()))
            throw MismatchError("unknown generator index in word");
    TermMap t = p->normalize(w, scale);
    return NcPoly(std::move(p), std::move(t));
}

NcPoly NcPoly::from_terms(PresentationPtr p, TermMap terms) {
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->second.is_zero())
            it = terms.erase(it);
        else
            ++it;
    }
    return NcPoly(std::move(p), std::move(terms));
}

Scalar NcPoly::constant_value() const {
    if (terms_.empty()) return Scalar::zero(pres_->params());
    if (terms_.size() > 1 || terms_.begin()->first != Monomial(pres_->num_gens(), 0))
        throw MismatchError("element is not a constant");
    return terms_.begin()->second;
}

void NcPoly::check_compatible(const NcPoly& o) const {
    if (pres_ == o.pres_) return;
    if (pres_ && o.pres_ && *pres_ == *o.pres_) return;
    throw MismatchError("operands belong to different presentations");
}

NcPoly NcPoly::operator-() const {
    TermMap t = terms_;
    for (auto& [m, s] : t) s = -s;
    return NcPoly(pres_, std::move(t));
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
    check_compatible(o);
    TermMap t = terms_;
    for (const auto& [m, s] : o.terms_) {
        auto it = t.find(m);
        if (it == t.end()) {
            t.emplace(m, s);
        } else {
            it->second += s;
            if (it->second.is_zero()) t.erase(it);
        }
    }
    return NcPoly(pres_, std::move(t));
}

NcPoly NcPoly::operator-(const NcPoly& o) const { return *this + (-o); }

NcPoly NcPoly::operator*(const NcPoly& o) const {
    check_compatible(o);
    TermMap acc;
    for (const auto& [m1, s1] : terms_) {
        Word w1 = pres_->expand(m1);
        for (const auto& [m2, s2] : o.terms_) {
            Word w = w1;
            Word w2 = pres_->expand(m2);
            w.insert(w.end(), w2.begin(), w2.end());
            for (const auto& [m, s] : pres_->normalize(w, s1 * s2)) {
                auto it = acc.find(m);
                if (it == acc.end()) {
                    acc.emplace(m, s);
                } else {
                    it->second += s;
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
        }
    }
    return NcPoly(pres_, std::move(acc));
}

NcPoly NcPoly::scaled(const Scalar& s) const {
    if (s.is_zero()) return zero(pres_);
    TermMap t;
    for (const auto& [m, v] : terms_) {
        Scalar sv = v * s;
        if (!sv.is_zero()) t.emplace(m, std::move(sv));
    }
    return NcPoly(pres_, std::move(t));
}

NcPoly NcPoly::pow(int k) const {
    if (k < 0) throw MismatchError("negative power of an algebra element");
    NcPoly r = one(pres_);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

bool NcPoly::operator==(const NcPoly& o) const {
    check_compatible(o);
    return terms_ == o.terms_;
}

std::string NcPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, s] = *it;
        std::string mono;
        for (std::size_t g = 0; g < m.size(); ++g) {
            if (m[g] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += pres_->gen_name(static_cast<int>(g));
            if (m[g] != 1) mono += "^" + std::to_string(m[g]);
        }
        if (mono.empty() && !s.is_unit() && terms_.size() == 1) {
            // A lone multi-term constant prints as-is; sign extraction would
            // need parentheses it doesn't get here.
            os << s.str();
            break;
        }
        bool negative = s.leading_negative();
        Scalar abs = negative ? -s : s;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        if (mono.empty()) {
            // Constant chunk inside a sum: parenthesize multi-term scalars.
            if (abs.is_unit())
                os << abs.str();
            else
                os << "(" << abs.str() << ")";
        } else if (abs.is_one()) {
            os << mono;
        } else if (abs.is_unit()) {
            os << abs.str() << "*" << mono;
        } else {
            os << "(" << abs.str() << ")*" << mono;
        }
    }
    return os.str();
}

NcPoly commutator(const NcPoly& a, const NcPoly& b) { return a * b - b * a; }

}  // namespace qring
