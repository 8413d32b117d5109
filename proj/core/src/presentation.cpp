#include "qring/presentation.hpp"

#include <algorithm>
#include <random>

#include "qring/errors.hpp"

namespace qring {

namespace {

void add_terms(TermMap& into, const TermMap& from) {
    for (const auto& [m, s] : from) {
        auto it = into.find(m);
        if (it == into.end()) {
            if (!s.is_zero()) into.emplace(m, s);
        } else {
            it->second += s;
            if (it->second.is_zero()) into.erase(it);
        }
    }
}

}  // namespace

PresentationPtr AlgebraPresentation::create(ParamSpacePtr params,
                                            std::vector<std::string> gens,
                                            std::vector<StraighteningRule> rules,
                                            std::vector<std::vector<int>> weights,
                                            AlgebraKind kind, int n) {
    auto p = std::shared_ptr<AlgebraPresentation>(new AlgebraPresentation());
    p->params_ = params ? std::move(params) : make_param_space({});
    p->gens_ = std::move(gens);
    p->rules_ = std::move(rules);
    p->weights_ = std::move(weights);
    p->kind_ = kind;
    p->n_ = n;
    const std::size_t N = p->gens_.size();
    if (p->rules_.size() != N * (N - 1) / 2 && N > 0)
        throw PresentationError("rule table must cover every out-of-order generator pair");
    if (p->weights_.empty()) p->weights_.assign(N, {});
    if (p->weights_.size() != N)
        throw PresentationError("need one weight vector per generator");
    p->validate_rules();
    p->self_check();
    return p;
}

std::optional<int> AlgebraPresentation::gen_index(const std::string& name) const {
    auto it = std::find(gens_.begin(), gens_.end(), name);
    if (it == gens_.end()) return std::nullopt;
    return static_cast<int>(it - gens_.begin());
}

const StraighteningRule& AlgebraPresentation::rule(int u, int v) const {
    return rules_[static_cast<std::size_t>(u) * (u - 1) / 2 + v];
}

void AlgebraPresentation::validate_rules() const {
    const int N = static_cast<int>(gens_.size());
    GrlexLess less;
    for (int u = 1; u < N; ++u) {
        for (int v = 0; v < u; ++v) {
            const auto& r = rule(u, v);
            if (!r.lead.is_unit())
                throw PresentationError("leading scalar of rule " + gens_[u] + "*" +
                                        gens_[v] + " is not a unit");
            if (!same_space(r.lead.space(), params_))
                throw PresentationError("rule scalar over wrong parameter space");
            Monomial swapped(N, 0);
            swapped[u] += 1;
            swapped[v] += 1;
            for (const auto& c : r.corrections) {
                if (c.coeff.is_zero())
                    throw PresentationError("zero correction coefficient stored");
                if (!same_space(c.coeff.space(), params_))
                    throw PresentationError("correction scalar over wrong parameter space");
                if (static_cast<int>(c.monomial.size()) != N)
                    throw PresentationError("correction monomial length mismatch");
                for (int e : c.monomial)
                    if (e < 0) throw PresentationError("negative exponent in correction");
                if (!less(c.monomial, swapped))
                    throw PresentationError("correction term of " + gens_[u] + "*" +
                                            gens_[v] +
                                            " is not strictly below the swapped pair");
            }
        }
    }
}

Monomial AlgebraPresentation::monomial_of_word_sorted(const Word& w) const {
    Monomial m(gens_.size(), 0);
    for (int g : w) ++m[g];
    return m;
}

Word AlgebraPresentation::expand(const Monomial& m) const {
    Word w;
    for (std::size_t g = 0; g < m.size(); ++g)
        for (int k = 0; k < m[g]; ++k) w.push_back(static_cast<int>(g));
    return w;
}

TermMap AlgebraPresentation::normalize(const Word& word, const Scalar& scale) const {
    TermMap out;
    if (scale.is_zero()) return out;
    if (!same_space(scale.space(), params_))
        throw MismatchError("scalar over wrong parameter space");
    std::map<Word, Scalar> pending;
    pending.emplace(word, scale);
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const Word& w = node.key();
        const Scalar& s = node.mapped();
        if (s.is_zero()) continue;
        std::size_t i = 0;
        bool sorted = true;
        for (; i + 1 < w.size(); ++i) {
            if (w[i] > w[i + 1]) {
                sorted = false;
                break;
            }
        }
        if (sorted) {
            Monomial m = monomial_of_word_sorted(w);
            auto it = out.find(m);
            if (it == out.end()) {
                out.emplace(std::move(m), s);
            } else {
                it->second += s;
                if (it->second.is_zero()) out.erase(it);
            }
            continue;
        }
        const auto& r = rule(w[i], w[i + 1]);
        auto push = [&pending](Word nw, Scalar ns) {
            if (ns.is_zero()) return;
            auto it = pending.find(nw);
            if (it == pending.end())
                pending.emplace(std::move(nw), std::move(ns));
            else
                it->second += ns;
        };
        Word swapped = w;
        std::swap(swapped[i], swapped[i + 1]);
        push(std::move(swapped), s * r.lead);
        for (const auto& c : r.corrections) {
            Word nw(w.begin(), w.begin() + i);
            Word mid = expand(c.monomial);
            nw.insert(nw.end(), mid.begin(), mid.end());
            nw.insert(nw.end(), w.begin() + i + 2, w.end());
            push(std::move(nw), s * c.coeff);
        }
    }
    return out;
}

bool AlgebraPresentation::check_triple(int u, int v, int w) const {
    const Scalar one = Scalar::one(params_);
    TermMap left, right;
    for (const auto& [m, s] : normalize({u, v}, one)) {
        Word word = expand(m);
        word.push_back(w);
        add_terms(left, normalize(word, s));
    }
    for (const auto& [m, s] : normalize({v, w}, one)) {
        Word word{u};
        Word rest = expand(m);
        word.insert(word.end(), rest.begin(), rest.end());
        add_terms(right, normalize(word, s));
    }
    return left == right;
}

void AlgebraPresentation::self_check() const {
    const int N = static_cast<int>(gens_.size());
    if (N == 0) return;
    if (N <= 9) {
        for (int u = 0; u < N; ++u)
            for (int v = 0; v < N; ++v)
                for (int w = 0; w < N; ++w)
                    if (!check_triple(u, v, w))
                        throw PresentationError(
                            "overlap self-check failed on triple " + gens_[u] + ", " +
                            gens_[v] + ", " + gens_[w]);
        return;
    }
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> pick(0, N - 1);
    for (int k = 0; k < 729; ++k) {
        int u = pick(rng), v = pick(rng), w = pick(rng);
        if (!check_triple(u, v, w))
            throw PresentationError("overlap self-check failed on sampled triple " +
                                    gens_[u] + ", " + gens_[v] + ", " + gens_[w]);
    }
}

bool AlgebraPresentation::operator==(const AlgebraPresentation& o) const {
    if (this == &o) return true;
    if (gens_ != o.gens_ || !same_space(params_, o.params_) ||
        weights_ != o.weights_ || rules_.size() != o.rules_.size())
        return false;
    for (std::size_t k = 0; k < rules_.size(); ++k) {
        if (rules_[k].lead != o.rules_[k].lead) return false;
        if (rules_[k].corrections.size() != o.rules_[k].corrections.size()) return false;
        for (std::size_t c = 0; c < rules_[k].corrections.size(); ++c) {
            if (rules_[k].corrections[c].monomial != o.rules_[k].corrections[c].monomial ||
                rules_[k].corrections[c].coeff != o.rules_[k].corrections[c].coeff)
                return false;
        }
    }
    return true;
}

PresentationPtr preset_quantum_affine(const CommutationSpec& c) {
    const int n = c.n();
    std::vector<std::string> gens;
    std::vector<std::vector<int>> weights;
    for (int i = 1; i <= n; ++i) {
        gens.push_back("x" + std::to_string(i));
        std::vector<int> w(n, 0);
        w[i - 1] = 1;
        weights.push_back(std::move(w));
    }
    std::vector<StraighteningRule> rules;
    for (int u = 1; u < n; ++u)
        for (int v = 0; v < u; ++v) rules.push_back({c.q(u, v), {}});
    return AlgebraPresentation::create(c.params(), std::move(gens), std::move(rules),
                                       std::move(weights), AlgebraKind::QuantumAffine, n);
}

PresentationPtr preset_quantum_plane() {
    CommutationSpec c = CommutationSpec::single_parameter(2);
    std::vector<StraighteningRule> rules{{c.q(1, 0), {}}};
    return AlgebraPresentation::create(c.params(), {"x", "y"}, std::move(rules),
                                       {{1, 0}, {0, 1}}, AlgebraKind::QuantumAffine, 2);
}

PresentationPtr preset_quantum_affine(int n) {
    return preset_quantum_affine(CommutationSpec::single_parameter(n));
}

PresentationPtr preset_quantum_affine_multiparam(int n) {
    return preset_quantum_affine(CommutationSpec::multiparameter(n));
}

PresentationPtr preset_quantum_matrices(int n) {
    if (n < 1) throw PresentationError("matrix size must be at least 1");
    auto space = make_param_space({"q"});
    const Scalar q = Scalar::param(space, "q");
    const Scalar qinv = q.inverse();
    const Scalar one = Scalar::one(space);
    std::vector<std::string> gens;
    std::vector<std::vector<int>> weights;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            gens.push_back("X[" + std::to_string(i) + "," + std::to_string(j) + "]");
            std::vector<int> w(2 * n, 0);
            w[i - 1] = 1;
            w[n + j - 1] = 1;
            weights.push_back(std::move(w));
        }
    const int N = n * n;
    auto row = [n](int g) { return g / n; };
    auto col = [n](int g) { return g % n; };
    std::vector<StraighteningRule> rules;
    for (int u = 1; u < N; ++u) {
        for (int v = 0; v < u; ++v) {
            int a = row(v), b = col(v), c = row(u), d = col(u);
            if (a == c || b == d) {
                // Same row or same column: X_v X_u = q X_u X_v.
                rules.push_back({qinv, {}});
            } else if (d < b) {
                // v northeast of u: the antidiagonal pair commutes.
                rules.push_back({one, {}});
            } else {
                // v northwest of u: diagonal pair.
                // X_cd X_ab = X_ab X_cd - (q - q^-1) X_ad X_cb.
                Monomial corr(N, 0);
                corr[a * n + d] += 1;
                corr[c * n + b] += 1;
                rules.push_back({one, {{-(q - qinv), std::move(corr)}}});
            }
        }
    }
    return AlgebraPresentation::create(space, std::move(gens), std::move(rules),
                                       std::move(weights), AlgebraKind::QuantumMatrices,
                                       n);
}

}  // namespace qring
