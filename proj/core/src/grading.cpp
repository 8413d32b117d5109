#include "qring/grading.hpp"

#include <algorithm>

#include "qring/errors.hpp"

namespace qring {

GradingSpec GradingSpec::from_presentation(const PresentationPtr& p) {
    GradingSpec g;
    g.weights = p->weights();
    g.rank = 0;
    for (const auto& w : g.weights) {
        g.rank = std::max<int>(g.rank, static_cast<int>(w.size()));
    }
    // Pad ragged weights so every vector has the common rank.
    for (auto& w : g.weights) {
        w.resize(g.rank, 0);
    }
    return g;
}

GradingSpec GradingSpec::affine(int n) {
    if (n < 1) throw Error("affine grading needs at least one generator");
    GradingSpec g;
    g.rank = n;
    g.weights.assign(n, Weight(n, 0));
    for (int i = 0; i < n; ++i) g.weights[i][i] = 1;
    return g;
}

GradingSpec GradingSpec::matrix(int n) {
    if (n < 1) throw Error("matrix grading needs n >= 1");
    GradingSpec g;
    g.rank = 2 * n;
    g.weights.assign(static_cast<std::size_t>(n) * n, Weight(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            auto& w = g.weights[static_cast<std::size_t>(i) * n + j];
            w[i] = 1;
            w[n + j] = 1;
        }
    }
    return g;
}

GradingSpec GradingSpec::sl2_style(int n) {
    if (n < 1) throw Error("sl2-style grading needs n >= 1");
    GradingSpec g;
    g.rank = 2;
    g.weights.assign(static_cast<std::size_t>(n) * n, Weight(2, 0));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            auto& w = g.weights[static_cast<std::size_t>(i - 1) * n + (j - 1)];
            w[0] = 3 - 2 * i;
            w[1] = 3 - 2 * j;
        }
    }
    return g;
}

void GradingSpec::validate(const PresentationPtr& p) const {
    if (weights.size() != p->num_gens()) {
        throw MismatchError("grading has " + std::to_string(weights.size()) +
                            " weights but algebra has " +
                            std::to_string(p->num_gens()) + " generators");
    }
    for (const auto& w : weights) {
        if (static_cast<int>(w.size()) != rank) {
            throw MismatchError("grading weight vector does not match declared rank");
        }
    }
    // The torus only acts on the algebra if every straightening rule is
    // homogeneous: each correction monomial must weigh the same as the pair.
    const int n = static_cast<int>(p->num_gens());
    for (int u = 1; u < n; ++u) {
        for (int v = 0; v < u; ++v) {
            Weight pair(rank, 0);
            for (int r = 0; r < rank; ++r) pair[r] = weights[u][r] + weights[v][r];
            for (const auto& c : p->rule(u, v).corrections) {
                if (weight_of(c.monomial, *this) != pair) {
                    throw PresentationError(
                        "grading is not compatible with the relation " +
                        p->gen_name(u) + "*" + p->gen_name(v));
                }
            }
        }
    }
}

Weight weight_of(const Monomial& m, const GradingSpec& g) {
    if (m.size() != g.weights.size()) {
        throw MismatchError("monomial length does not match grading");
    }
    Weight total(g.rank, 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        for (int r = 0; r < g.rank; ++r) total[r] += m[i] * g.weights[i][r];
    }
    return total;
}

std::optional<Weight> is_homogeneous(const NcPoly& p, const GradingSpec& g) {
    g.validate(p.presentation());
    if (p.is_zero()) return Weight(g.rank, 0);
    std::optional<Weight> found;
    for (const auto& [mono, coeff] : p.terms()) {
        Weight w = weight_of(mono, g);
        if (!found) {
            found = std::move(w);
        } else if (*found != w) {
            return std::nullopt;
        }
    }
    return found;
}

bool h_stable_by_generators(const std::vector<NcPoly>& gens, const GradingSpec& g) {
    for (const auto& p : gens) {
        if (!is_homogeneous(p, g)) return false;
    }
    return true;
}

}  // namespace qring
