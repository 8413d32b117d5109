#include "qring/hom.hpp"

#include <algorithm>

#include "qring/errors.hpp"

namespace qring {

AlgebraHom::AlgebraHom(PresentationPtr source, PresentationPtr target,
                       std::vector<NcPoly> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_->num_gens())
        throw MismatchError("need one image per source generator");
    for (const auto& im : images_)
        if (!(im.presentation() == target_ ||
              (im.presentation() && *im.presentation() == *target_)))
            throw MismatchError("image lies outside the target presentation");
}

NcPoly AlgebraHom::apply(const NcPoly& p) const {
    if (!(p.presentation() == source_ ||
          (p.presentation() && *p.presentation() == *source_)))
        throw MismatchError("argument lies outside the source presentation");
    NcPoly acc = NcPoly::zero(target_);
    for (const auto& [m, s] : p.terms()) {
        NcPoly prod = NcPoly::constant(target_, s);
        for (std::size_t g = 0; g < m.size(); ++g)
            for (int k = 0; k < m[g]; ++k) prod = prod * images_[g];
        acc = acc + prod;
    }
    return acc;
}

bool AlgebraHom::verify() const {
    const int N = static_cast<int>(source_->num_gens());
    for (int u = 1; u < N; ++u) {
        for (int v = 0; v < u; ++v) {
            const auto& r = source_->rule(u, v);
            NcPoly lhs = images_[u] * images_[v];
            NcPoly rhs = (images_[v] * images_[u]).scaled(r.lead);
            for (const auto& c : r.corrections) {
                NcPoly mono = NcPoly::one(target_);
                for (std::size_t g = 0; g < c.monomial.size(); ++g)
                    for (int k = 0; k < c.monomial[g]; ++k) mono = mono * images_[g];
                rhs = rhs + mono.scaled(c.coeff);
            }
            if (lhs != rhs) return false;
        }
    }
    return true;
}

AlgebraHom compose(const AlgebraHom& outer, const AlgebraHom& inner) {
    std::vector<NcPoly> images;
    images.reserve(inner.images().size());
    for (const auto& im : inner.images()) images.push_back(outer.apply(im));
    return AlgebraHom(inner.source(), outer.target(), std::move(images));
}

namespace {

// Appends primes to the base name (before any index bracket) until unique.
std::string primed_name(std::string name, const std::vector<std::string>& taken) {
    auto bracket = name.find('[');
    std::string base = bracket == std::string::npos ? name : name.substr(0, bracket);
    std::string rest = bracket == std::string::npos ? "" : name.substr(bracket);
    std::string candidate;
    do {
        base += "'";
        candidate = base + rest;
    } while (std::find(taken.begin(), taken.end(), candidate) != taken.end());
    return candidate;
}

}  // namespace

PresentationPtr tensor_product(const PresentationPtr& a, const PresentationPtr& b) {
    if (!same_space(a->params(), b->params()))
        throw MismatchError("tensor factors over different parameter spaces");
    const int NA = static_cast<int>(a->num_gens());
    const int NB = static_cast<int>(b->num_gens());
    std::vector<std::string> gens = a->gens();
    for (const auto& name : b->gens()) gens.push_back(primed_name(name, gens));

    const std::size_t rankA = a->weights().empty() ? 0 : a->weights()[0].size();
    const std::size_t rankB = b->weights().empty() ? 0 : b->weights()[0].size();
    std::vector<std::vector<int>> weights;
    for (const auto& w : a->weights()) {
        std::vector<int> v(w);
        v.resize(rankA + rankB, 0);
        weights.push_back(std::move(v));
    }
    for (const auto& w : b->weights()) {
        std::vector<int> v(rankA, 0);
        v.insert(v.end(), w.begin(), w.end());
        v.resize(rankA + rankB, 0);
        weights.push_back(std::move(v));
    }

    const Scalar one = Scalar::one(a->params());
    std::vector<StraighteningRule> rules;
    for (int u = 1; u < NA + NB; ++u) {
        for (int v = 0; v < u; ++v) {
            if (u < NA) {
                const auto& r = a->rule(u, v);
                StraighteningRule padded{r.lead, {}};
                for (const auto& c : r.corrections) {
                    Monomial m = c.monomial;
                    m.resize(NA + NB, 0);
                    padded.corrections.push_back({c.coeff, std::move(m)});
                }
                rules.push_back(std::move(padded));
            } else if (v >= NA) {
                const auto& r = b->rule(u - NA, v - NA);
                StraighteningRule shifted{r.lead, {}};
                for (const auto& c : r.corrections) {
                    Monomial m(NA, 0);
                    m.insert(m.end(), c.monomial.begin(), c.monomial.end());
                    shifted.corrections.push_back({c.coeff, std::move(m)});
                }
                rules.push_back(std::move(shifted));
            } else {
                // Cross pair: the two copies commute elementwise.
                rules.push_back({one, {}});
            }
        }
    }
    return AlgebraPresentation::create(a->params(), std::move(gens), std::move(rules),
                                       std::move(weights), AlgebraKind::Tensor, NA);
}

PresentationPtr tensor_square(const PresentationPtr& a) { return tensor_product(a, a); }

NcPoly tensor_elem(const PresentationPtr& tensor, const NcPoly& left,
                   const NcPoly& right) {
    const std::size_t NA = left.presentation()->num_gens();
    const std::size_t NB = right.presentation()->num_gens();
    if (tensor->num_gens() != NA + NB ||
        static_cast<std::size_t>(tensor->tensor_split()) != NA)
        throw MismatchError("tensor presentation does not match the factors");
    TermMap terms;
    for (const auto& [ml, sl] : left.terms()) {
        for (const auto& [mr, sr] : right.terms()) {
            Monomial m = ml;
            m.insert(m.end(), mr.begin(), mr.end());
            Scalar s = sl * sr;
            if (!s.is_zero()) terms.emplace(std::move(m), std::move(s));
        }
    }
    return NcPoly::from_terms(tensor, std::move(terms));
}

QuotientResult quotient_by_generators(const PresentationPtr& a,
                                      const std::set<int>& deleted) {
    const int N = static_cast<int>(a->num_gens());
    for (int g : deleted)
        if (g < 0 || g >= N) throw MismatchError("deleted generator index out of range");

    auto touches_deleted = [&](const Monomial& m) {
        for (int g : deleted)
            if (m[g] > 0) return true;
        return false;
    };
    // Closure check: a relation with a corner in S must keep all its
    // correction content inside S, else the quotient loses information.
    for (int u = 1; u < N; ++u) {
        for (int v = 0; v < u; ++v) {
            if (!deleted.count(u) && !deleted.count(v)) continue;
            for (const auto& c : a->rule(u, v).corrections) {
                if (!touches_deleted(c.monomial))
                    throw ClosureError("quotient closure violation: relation " +
                                       a->gen_name(u) + "*" + a->gen_name(v) +
                                       " forces correction content " +
                                       [&] {
                                           std::string s;
                                           for (std::size_t g = 0; g < c.monomial.size(); ++g)
                                               for (int k = 0; k < c.monomial[g]; ++k)
                                                   s += (s.empty() ? "" : "*") +
                                                        a->gen_name(static_cast<int>(g));
                                           return s;
                                       }() +
                                       " outside the deleted set");
            }
        }
    }

    std::vector<int> surviving;
    std::vector<int> new_index(N, -1);
    for (int g = 0; g < N; ++g) {
        if (!deleted.count(g)) {
            new_index[g] = static_cast<int>(surviving.size());
            surviving.push_back(g);
        }
    }

    std::vector<std::string> gens;
    std::vector<std::vector<int>> weights;
    for (int g : surviving) {
        gens.push_back(a->gen_name(g));
        weights.push_back(a->weights()[g]);
    }
    const int M = static_cast<int>(surviving.size());
    std::vector<StraighteningRule> rules;
    for (int u = 1; u < M; ++u) {
        for (int v = 0; v < u; ++v) {
            const auto& r = a->rule(surviving[u], surviving[v]);
            StraighteningRule nr{r.lead, {}};
            for (const auto& c : r.corrections) {
                if (touches_deleted(c.monomial)) continue;
                Monomial m(M, 0);
                for (int g = 0; g < N; ++g)
                    if (c.monomial[g] > 0) m[new_index[g]] = c.monomial[g];
                nr.corrections.push_back({c.coeff, std::move(m)});
            }
            rules.push_back(std::move(nr));
        }
    }
    PresentationPtr q = AlgebraPresentation::create(
        a->params(), std::move(gens), std::move(rules), std::move(weights),
        AlgebraKind::Generic, 0);

    std::vector<NcPoly> images;
    for (int g = 0; g < N; ++g) {
        if (deleted.count(g))
            images.push_back(NcPoly::zero(q));
        else
            images.push_back(NcPoly::generator(q, new_index[g]));
    }
    return {q, AlgebraHom(a, q, std::move(images)), std::move(surviving)};
}

}  // namespace qring
