#include "qring/twist.hpp"

#include <sstream>

#include "qring/errors.hpp"

namespace qring {

CocycleSpec::CocycleSpec(int n, ParamSpacePtr params, std::vector<IntMatrix> forms)
    : n_(n), params_(std::move(params)), forms_(std::move(forms)) {
    if (n_ < 0) throw Error("cocycle needs a nonnegative rank");
    if (!params_) throw Error("cocycle needs a parameter space");
    if (forms_.size() != params_->size()) {
        throw Error("cocycle needs one bilinear form per parameter");
    }
    for (const auto& b : forms_) {
        if (b.size() != static_cast<std::size_t>(n_)) {
            throw Error("bilinear form size does not match rank");
        }
        for (const auto& row : b) {
            if (row.size() != static_cast<std::size_t>(n_)) {
                throw Error("bilinear form is not square");
            }
        }
    }
}

Scalar CocycleSpec::eval(const std::vector<int>& a, const std::vector<int>& b) const {
    if (a.size() != static_cast<std::size_t>(n_) ||
        b.size() != static_cast<std::size_t>(n_)) {
        throw MismatchError("cocycle argument length does not match rank");
    }
    Scalar::Exponents exps(params_->size(), 0);
    for (std::size_t t = 0; t < forms_.size(); ++t) {
        long long e = 0;
        for (int i = 0; i < n_; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < n_; ++j) {
                e += static_cast<long long>(a[i]) * forms_[t][i][j] * b[j];
            }
        }
        exps[t] = static_cast<int>(e);
    }
    return Scalar::term(params_, 1, std::move(exps));
}

Scalar CocycleSpec::q(int i, int j) const {
    std::vector<int> ei(n_, 0), ej(n_, 0);
    ei.at(i) = 1;
    ej.at(j) = 1;
    return eval(ei, ej) * eval(ej, ei).inverse();
}

CocycleSpec CocycleSpec::inverse() const {
    std::vector<IntMatrix> neg = forms_;
    for (auto& b : neg) {
        for (auto& row : b) {
            for (auto& x : row) x = -x;
        }
    }
    return CocycleSpec(n_, params_, std::move(neg));
}

CocycleSpec CocycleSpec::opposite() const {
    std::vector<IntMatrix> tr = forms_;
    for (auto& b : tr) {
        for (int i = 0; i < n_; ++i) {
            for (int j = i + 1; j < n_; ++j) std::swap(b[i][j], b[j][i]);
        }
    }
    return CocycleSpec(n_, params_, std::move(tr));
}

CocycleSpec standard_cocycle(const CommutationSpec& c) {
    std::vector<CocycleSpec::IntMatrix> forms;
    forms.reserve(c.exponents().size());
    for (const auto& e : c.exponents()) {
        CocycleSpec::IntMatrix b(c.n(), std::vector<int>(c.n(), 0));
        for (int i = 0; i < c.n(); ++i) {
            for (int j = i + 1; j < c.n(); ++j) b[i][j] = e[i][j];
        }
        forms.push_back(std::move(b));
    }
    return CocycleSpec(c.n(), c.params(), std::move(forms));
}

void CommElem::check_compatible(const CommElem& o) const {
    if (n_ != o.n_ || !same_space(space_, o.space_)) {
        throw MismatchError("operands belong to different twisted algebras");
    }
}

void CommElem::add_term(const Monomial& m, const Scalar& s) {
    if (s.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, s);
    } else {
        it->second += s;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CommElem CommElem::operator-() const {
    CommElem out(n_, space_);
    for (const auto& [m, s] : terms_) out.terms_.emplace(m, -s);
    return out;
}

CommElem CommElem::operator+(const CommElem& o) const {
    check_compatible(o);
    CommElem out = *this;
    for (const auto& [m, s] : o.terms_) out.add_term(m, s);
    return out;
}

CommElem CommElem::operator-(const CommElem& o) const { return *this + (-o); }

CommElem CommElem::scaled(const Scalar& s) const {
    CommElem out(n_, space_);
    if (s.is_zero()) return out;
    for (const auto& [m, v] : terms_) out.add_term(m, v * s);
    return out;
}

bool CommElem::operator==(const CommElem& o) const {
    check_compatible(o);
    return terms_ == o.terms_;
}

std::string CommElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, s] = *it;
        std::string mono;
        for (std::size_t g = 0; g < m.size(); ++g) {
            if (m[g] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "y" + std::to_string(g + 1);
            if (m[g] != 1) mono += "^" + std::to_string(m[g]);
        }
        if (mono.empty() && !s.is_unit() && terms_.size() == 1) {
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

TwistedAlgebra TwistedAlgebra::polynomial_ring(CocycleSpec c) {
    return TwistedAlgebra(std::move(c));
}

TwistedAlgebra TwistedAlgebra::semigroup_algebra(CocycleSpec c,
                                                 std::vector<std::vector<int>> semigroup_gens,
                                                 int degree_bound) {
    TwistedAlgebra t(std::move(c));
    t.truncated_ = true;
    if (degree_bound < 0) throw Error("degree bound must be nonnegative");
    for (const auto& g : semigroup_gens) {
        if (g.size() != static_cast<std::size_t>(t.n())) {
            throw Error("semigroup generator length does not match rank");
        }
    }
    // Basis: all sums of at most degree_bound generators.
    std::set<Monomial> frontier = {Monomial(t.n(), 0)};
    t.basis_ = frontier;
    for (int depth = 0; depth < degree_bound; ++depth) {
        std::set<Monomial> next;
        for (const auto& m : frontier) {
            for (const auto& g : semigroup_gens) {
                Monomial sum = m;
                for (int i = 0; i < t.n(); ++i) sum[i] += g[i];
                if (t.basis_.insert(sum).second) next.insert(std::move(sum));
            }
        }
        if (next.empty()) break;
        frontier = std::move(next);
    }
    return t;
}

bool TwistedAlgebra::admits(const Monomial& m) const {
    if (m.size() != static_cast<std::size_t>(n())) return false;
    if (truncated_) return basis_.count(m) > 0;
    for (int e : m) {
        if (e < 0) return false;
    }
    return true;
}

CommElem TwistedAlgebra::zero() const { return CommElem(n(), cocycle_.params()); }

CommElem TwistedAlgebra::one() const {
    return monomial(Monomial(n(), 0), Scalar::one(cocycle_.params()));
}

CommElem TwistedAlgebra::generator(int i) const {
    Monomial m(n(), 0);
    m.at(i) = 1;
    return monomial(std::move(m), Scalar::one(cocycle_.params()));
}

CommElem TwistedAlgebra::monomial(Monomial m, Scalar coeff) const {
    if (m.size() != static_cast<std::size_t>(n())) {
        throw MismatchError("monomial length does not match the twisted algebra");
    }
    if (!admits(m)) {
        throw MismatchError("monomial outside the twisted algebra basis");
    }
    CommElem out = zero();
    out.add_term(m, coeff);
    return out;
}

CommElem twist_product(const CommElem& r, const CommElem& s, const TwistedAlgebra& t) {
    if (r.n() != t.n() || s.n() != t.n() ||
        !same_space(r.space(), t.cocycle().params()) ||
        !same_space(s.space(), t.cocycle().params())) {
        throw MismatchError(
            "degree bookkeeping mismatch: operand does not live in the twisted algebra");
    }
    CommElem out = t.zero();
    for (const auto& [a, ca] : r.terms()) {
        if (!t.admits(a)) {
            throw MismatchError(
                "degree bookkeeping mismatch: operand monomial outside the basis");
        }
        for (const auto& [b, cb] : s.terms()) {
            if (!t.admits(b)) {
                throw MismatchError(
                    "degree bookkeeping mismatch: operand monomial outside the basis");
            }
            Monomial sum(t.n());
            for (int i = 0; i < t.n(); ++i) sum[i] = a[i] + b[i];
            if (!t.admits(sum)) {
                throw MismatchError(
                    "degree bookkeeping mismatch: product leaves the truncated basis");
            }
            out.add_term(sum, t.cocycle().eval(a, b) * ca * cb);
        }
    }
    return out;
}

namespace {

// phi maps between a pure q-commutation algebra and a twisted commutative
// algebra over the same parameters with the same antisymmetrized scalars.
void check_phi_compatible(const PresentationPtr& pres, const TwistedAlgebra& t) {
    if (!pres) throw MismatchError("missing presentation");
    if (pres->num_gens() != static_cast<std::size_t>(t.n()) ||
        !same_space(pres->params(), t.cocycle().params())) {
        throw MismatchError("mismatched commutation data between algebra and cocycle");
    }
    const int n = static_cast<int>(pres->num_gens());
    for (int u = 1; u < n; ++u) {
        for (int v = 0; v < u; ++v) {
            const StraighteningRule& r = pres->rule(u, v);
            if (!r.corrections.empty()) {
                throw MismatchError(
                    "the basis-preserving map requires a pure q-commutation algebra");
            }
            if (r.lead != t.cocycle().q(u, v)) {
                throw MismatchError(
                    "mismatched commutation data between algebra and cocycle");
            }
        }
    }
}

}  // namespace

CommElem phi_c(const NcPoly& p, const TwistedAlgebra& t) {
    check_phi_compatible(p.presentation(), t);
    CommElem out = t.zero();
    for (const auto& [m, s] : p.terms()) {
        if (!t.admits(m)) {
            throw MismatchError(
                "degree bookkeeping mismatch: monomial outside the twisted basis");
        }
        out.add_term(m, s);
    }
    return out;
}

NcPoly phi_c_inverse(const CommElem& e, const PresentationPtr& pres,
                     const TwistedAlgebra& t) {
    check_phi_compatible(pres, t);
    if (e.n() != t.n() || !same_space(e.space(), t.cocycle().params())) {
        throw MismatchError("element does not live in the twisted algebra");
    }
    NcPoly out = NcPoly::zero(pres);
    for (const auto& [m, s] : e.terms()) {
        out = out + NcPoly::monomial(pres, m, s);
    }
    return out;
}

std::string IdealDescriptor::str() const {
    std::ostringstream os;
    os << "<";
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (i) os << ", ";
        os << generators[i].str();
    }
    os << ">";
    return os.str();
}

QuotientMap3::QuotientMap3(ParamSpacePtr space) : space_(std::move(space)) {
    if (!space_) throw Error("quotient map needs a parameter space");
    auto p = space_->resolve("p");
    auto q = space_->resolve("q");
    if (!p || p->second != 1 || !q || q->first != p->first || q->second != 2) {
        throw Error("quotient map needs parameters p and q with q = p^2");
    }
    algebra_ = preset_quantum_affine(CommutationSpec::single_parameter(3, space_, "q"));
    p_ = Scalar::param(space_, "p");
}

QuotientMap3 QuotientMap3::standard() {
    return QuotientMap3(make_param_space_with_root({"p", "l1", "l2", "l3"}, "q", "p"));
}

QuotientPoint QuotientMap3::symbolic_point() const {
    return {Scalar::param(space_, "l1"), Scalar::param(space_, "l2"),
            Scalar::param(space_, "l3")};
}

IdealDescriptor QuotientMap3::map_point(const QuotientPoint& pt) const {
    for (const auto& c : pt) {
        if (!same_space(c.space(), space_)) {
            throw MismatchError("point coordinates use a foreign parameter space");
        }
    }
    std::array<bool, 3> nonzero{};
    int count = 0;
    for (int i = 0; i < 3; ++i) {
        nonzero[i] = !pt[i].is_zero();
        count += nonzero[i] ? 1 : 0;
    }

    IdealDescriptor d;
    switch (count) {
        case 0: {
            d.shape = IdealShape::Augmentation;
            for (int i = 0; i < 3; ++i) d.generators.push_back(NcPoly::generator(algebra_, i));
            break;
        }
        case 1: {
            d.shape = IdealShape::AxisPoint;
            for (int i = 0; i < 3; ++i) {
                if (nonzero[i]) {
                    d.index = i + 1;
                    d.generators.push_back(NcPoly::generator(algebra_, i) -
                                           NcPoly::constant(algebra_, pt[i]));
                } else {
                    d.generators.push_back(NcPoly::generator(algebra_, i));
                }
            }
            break;
        }
        case 2: {
            d.shape = IdealShape::CoordinatePrime;
            for (int i = 0; i < 3; ++i) {
                if (!nonzero[i]) {
                    d.index = i + 1;
                    d.generators.push_back(NcPoly::generator(algebra_, i));
                }
            }
            break;
        }
        default: {
            d.shape = IdealShape::BinomialPrime;
            // l2 * x1 x3 - p l1 l3 * x2, already a sorted binomial.
            NcPoly lead = NcPoly::monomial(algebra_, {1, 0, 1}, pt[1]);
            NcPoly tail = NcPoly::monomial(algebra_, {0, 1, 0}, p_ * pt[0] * pt[2]);
            d.generators.push_back(lead - tail);
            break;
        }
    }
    return d;
}

bool QuotientMap3::fibre_equal(const QuotientPoint& a, const QuotientPoint& b) const {
    IdealDescriptor da = map_point(a);
    IdealDescriptor db = map_point(b);
    if (da.shape != db.shape || da.index != db.index) return false;
    if (da.shape == IdealShape::BinomialPrime) {
        // Proportional binomials: mu2 l1 l3 = l2 mu1 mu3 (p is a unit).
        return a[1] * b[0] * b[2] == b[1] * a[0] * a[2];
    }
    if (da.generators.size() != db.generators.size()) return false;
    for (std::size_t i = 0; i < da.generators.size(); ++i) {
        if (da.generators[i] != db.generators[i]) return false;
    }
    return true;
}

QuotientMap3::PreimageReport QuotientMap3::preimage_closed_check(int generator_index) const {
    if (generator_index < 1 || generator_index > 3) {
        throw Error("unsupported generator: the quotient map covers x1, x2, x3");
    }
    const QuotientPoint sym = symbolic_point();
    const NcPoly target = NcPoly::generator(algebra_, generator_index - 1);

    PreimageReport rep;
    rep.generator = generator_index;
    rep.locus = "l" + std::to_string(generator_index) + " = 0";
    rep.closed = true;
    for (int mask = 0; mask < 8; ++mask) {
        QuotientPoint pt;
        std::array<bool, 3> nz{};
        for (int i = 0; i < 3; ++i) {
            nz[i] = (mask >> i & 1) != 0;
            pt[i] = nz[i] ? sym[i] : Scalar::zero(space_);
        }
        const IdealDescriptor d = map_point(pt);
        bool contains = false;
        for (const auto& g : d.generators) {
            if (g == target) {
                contains = true;
                break;
            }
        }
        const bool expected = !nz[generator_index - 1];
        if (contains != expected) rep.closed = false;
        if (contains) rep.cases_containing.push_back(nz);
    }
    return rep;
}

}  // namespace qring
