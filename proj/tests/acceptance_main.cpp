// Acceptance gate: one line per criterion, [PASS]/[FAIL] with the measured
// runtime against the budget. Exits nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <qring/hom.hpp>
#include <qring/patterns.hpp>
#include <qring/qmatrix.hpp>
#include <qring/strata.hpp>
#include <qring/twist.hpp>

using namespace qring;

namespace {

// Every criterion returns an empty string on success or a short reason.
using CriterionFn = std::function<std::string()>;

struct Criterion {
    std::string name;
    double budget_seconds;
    CriterionFn fn;
};

std::string check_presentation_relations(const PresentationPtr& p,
                                         const std::string& label) {
    const int n = static_cast<int>(p->num_gens());
    const Scalar one = Scalar::one(p->params());
    for (int u = 1; u < n; ++u) {
        for (int v = 0; v < u; ++v) {
            const StraighteningRule& r = p->rule(u, v);
            NcPoly rhs = NcPoly::from_word(p, {v, u}, r.lead);
            for (const auto& c : r.corrections) {
                rhs = rhs + NcPoly::monomial(p, c.monomial, c.coeff);
            }
            if (NcPoly::from_word(p, {u, v}, one) != rhs) {
                return label + ": relation (" + p->gen_name(u) + "," + p->gen_name(v) +
                       ") does not straighten to its rule";
            }
        }
    }
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            for (int w = 0; w < n; ++w) {
                if (!p->check_triple(u, v, w)) {
                    std::ostringstream os;
                    os << label << ": normalization is not associative on the triple ("
                       << u << "," << v << "," << w << ")";
                    return os.str();
                }
            }
        }
    }
    return {};
}

std::string criterion_relations() {
    struct Case {
        PresentationPtr p;
        std::string label;
    };
    const std::vector<Case> cases = {
        {preset_quantum_plane(), "quantum plane"},
        {preset_quantum_affine_multiparam(3), "3-variable multiparameter space"},
        {preset_quantum_matrices(2), "2x2 matrices"},
        {preset_quantum_matrices(3), "3x3 matrices"},
    };
    for (const auto& c : cases) {
        if (auto msg = check_presentation_relations(c.p, c.label); !msg.empty()) {
            return msg;
        }
    }
    return {};
}

std::string criterion_centrality() {
    for (int n = 2; n <= 3; ++n) {
        auto m = preset_quantum_matrices(n);
        NcPoly d = qdet(m);
        if (!is_central(d)) {
            return "the " + std::to_string(n) + "x" + std::to_string(n) +
                   " determinant is not central";
        }
        for (std::size_t g = 0; g < m->num_gens(); ++g) {
            if (!commutator(d, NcPoly::generator(m, static_cast<int>(g))).is_zero()) {
                return "nonzero commutator with " + m->gen_name(static_cast<int>(g));
            }
        }
    }
    return {};
}

std::string criterion_bialgebra() {
    for (int n = 2; n <= 3; ++n) {
        auto m = preset_quantum_matrices(n);
        auto dh = delta_hom(m);
        if (!dh.hom.verify()) {
            return "comultiplication images do not respect the relations (n=" +
                   std::to_string(n) + ")";
        }
        NcPoly d = qdet(m);
        if (dh.hom.apply(d) != tensor_elem(dh.tensor, d, d)) {
            return "the determinant is not grouplike (n=" + std::to_string(n) + ")";
        }
        if (!counit(d).is_one()) {
            return "counit of the determinant is not 1 (n=" + std::to_string(n) + ")";
        }
    }

    // Coassociativity on generators for n=2, via positional triple tensors:
    // applying the tensor square twice gives the same generator layout for
    // both association orders, so (Delta x id)Delta and (id x Delta)Delta
    // land in literally the same presentation.
    auto m = preset_quantum_matrices(2);
    const int N = static_cast<int>(m->num_gens());
    auto dh = delta_hom(m);
    auto t3 = tensor_product(dh.tensor, m);

    std::vector<NcPoly> embed_images, shift_images;
    for (int k = 0; k < 2 * N; ++k) {
        embed_images.push_back(NcPoly::generator(t3, k));
        shift_images.push_back(NcPoly::generator(t3, N + k));
    }
    AlgebraHom embed(dh.tensor, t3, embed_images);
    AlgebraHom shift(dh.tensor, t3, shift_images);
    if (!embed.verify() || !shift.verify()) {
        return "tensor-square copies do not embed into the triple tensor";
    }

    std::vector<NcPoly> left_images, right_images;
    for (int k = 0; k < 2 * N; ++k) {
        if (k < N) {
            left_images.push_back(embed.apply(dh.hom.apply(NcPoly::generator(m, k))));
            right_images.push_back(NcPoly::generator(t3, k));
        } else {
            left_images.push_back(NcPoly::generator(t3, N + k));
            right_images.push_back(
                shift.apply(dh.hom.apply(NcPoly::generator(m, k - N))));
        }
    }
    AlgebraHom delta_then_left(dh.tensor, t3, left_images);
    AlgebraHom delta_then_right(dh.tensor, t3, right_images);
    if (!delta_then_left.verify() || !delta_then_right.verify()) {
        return "one-sided comultiplications do not respect the relations";
    }
    for (int g = 0; g < N; ++g) {
        NcPoly dg = dh.hom.apply(NcPoly::generator(m, g));
        if (delta_then_left.apply(dg) != delta_then_right.apply(dg)) {
            return "coassociativity fails on " + m->gen_name(g);
        }
    }
    return {};
}

std::vector<std::vector<int>> subsets_of_size(int n, int t) {
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) != t) continue;
        std::vector<int> s;
        for (int i = 0; i < n; ++i) {
            if (mask >> i & 1) s.push_back(i + 1);
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::string criterion_mu_star() {
    for (int n = 2; n <= 3; ++n) {
        auto m = preset_quantum_matrices(n);
        for (int t = 1; t <= n; ++t) {
            auto ms = mu_q_star_hom(m, t);
            for (const auto& rows : subsets_of_size(n, t)) {
                for (const auto& cols : subsets_of_size(n, t)) {
                    NcPoly minor = qminor(m, MinorIndex{rows, cols});
                    if (!ms.hom.apply(minor).is_zero()) {
                        std::ostringstream os;
                        os << "a " << t << "x" << t << " minor survives level " << t
                           << " (n=" << n << ")";
                        return os.str();
                    }
                }
            }
        }
    }
    return {};
}

std::string criterion_strata() {
    auto two = strata_report(CommutationSpec::single_parameter(2));
    if (two.size() != 4) return "two-variable report does not have 4 strata";
    const std::vector<int> expected_ranks = {0, 1, 1, 0};
    for (int i = 0; i < 4; ++i) {
        if (two[i].center_rank != expected_ranks[i]) {
            return "two-variable center ranks differ from 0,1,1,0";
        }
    }

    for (int n = 2; n <= 6; ++n) {
        auto rep = strata_report(CommutationSpec::single_parameter(n));
        if (rep.size() != (std::size_t{1} << n)) {
            return "expected 2^" + std::to_string(n) + " strata";
        }
    }

    auto three = strata_report(CommutationSpec::single_parameter(3));
    const auto& full = three.front();
    if (!full.w.empty() || full.center_rank != 1 ||
        full.center_basis != std::vector<LatticeRow>{{1, -1, 1}}) {
        return "three-variable full-torus center is not spanned by (1,-1,1)";
    }
    return {};
}

std::string criterion_patterns() {
    for (int n = 1; n <= 3; ++n) {
        auto rep = verify_parametrization(n);
        if (!rep.equal || !rep.missing.empty() || !rep.extra.empty()) {
            return "parametrization misses or overshoots the closure patterns (n=" +
                   std::to_string(n) + ")";
        }
    }

    for (int n = 2; n <= 3; ++n) {
        auto m = preset_quantum_matrices(n);
        for (const auto& pat : enumerate_star(n)) {
            const auto deleted_list = pat.generator_indices();
            const std::set<int> deleted(deleted_list.begin(), deleted_list.end());
            std::optional<QuotientResult> qr;
            try {
                qr.emplace(quotient_by_generators(m, deleted));
            } catch (const std::exception& e) {
                return "pattern quotient rejected: " + std::string(e.what());
            }
            if (!qr->projection.verify()) {
                return "pattern projection violates the relations";
            }
            // Faithfulness on survivors: each one maps to its own generator.
            for (std::size_t k = 0; k < qr->surviving.size(); ++k) {
                NcPoly image =
                    qr->projection.apply(NcPoly::generator(m, qr->surviving[k]));
                if (image != NcPoly::generator(qr->quotient, static_cast<int>(k))) {
                    return "a surviving generator is not kept by the quotient";
                }
            }
            if (deleted.size() + qr->surviving.size() != m->num_gens()) {
                return "quotient dropped an unexpected generator";
            }
        }
    }
    return {};
}

std::string criterion_rank_le1() {
    for (int n = 2; n <= 6; ++n) {
        auto r = rank_le1_count(n);
        const long long formula = (((1LL << n) - 1) * ((1LL << n) - 1)) + 1;
        if (r.count != formula || !r.matches_formula || r.formula != formula) {
            return "count differs from (2^n-1)^2+1 at n=" + std::to_string(n);
        }
    }
    return {};
}

std::string criterion_twist() {
    for (int n = 2; n <= 4; ++n) {
        for (auto spec : {CommutationSpec::single_parameter(n),
                          CommutationSpec::multiparameter(n)}) {
            auto t = TwistedAlgebra::polynomial_ring(standard_cocycle(spec));
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    CommElem lhs = twist_product(t.generator(i), t.generator(j), t);
                    CommElem rhs = twist_product(t.generator(j), t.generator(i), t)
                                       .scaled(spec.q(i, j));
                    if (lhs != rhs) {
                        return "twisted commutation fails for a generator pair (n=" +
                               std::to_string(n) + ")";
                    }
                }
            }
        }
    }

    std::mt19937 rng(20240815);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (auto spec : {CommutationSpec::single_parameter(4),
                      CommutationSpec::multiparameter(4)}) {
        auto c = standard_cocycle(spec);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<int> a(4), b(4), g(4), ab(4), bg(4);
            for (int i = 0; i < 4; ++i) {
                a[i] = entry(rng);
                b[i] = entry(rng);
                g[i] = entry(rng);
                ab[i] = a[i] + b[i];
                bg[i] = b[i] + g[i];
            }
            if (c.eval(a, b) * c.eval(ab, g) != c.eval(b, g) * c.eval(a, bg)) {
                return "cocycle identity fails on a sampled triple";
            }
        }
    }
    return {};
}

std::string criterion_quotient_map() {
    std::vector<std::string> names = {"p", "l1", "l2", "l3", "t1", "t3"};
    QuotientMap3 map(make_param_space_with_root(names, "q", "p"));
    auto sp = map.space();
    auto alg = map.algebra();
    auto zero = Scalar::zero(sp);
    auto S = [&](const std::string& s) { return Scalar::param(sp, s); };
    auto X = [&](int i) { return NcPoly::generator(alg, i - 1); };

    struct Row {
        QuotientPoint point;
        IdealShape shape;
        int index;
        std::vector<NcPoly> generators;
    };
    NcPoly dense_gen = NcPoly::monomial(alg, {1, 0, 1}, S("l2")) -
                       NcPoly::monomial(alg, {0, 1, 0}, S("p") * S("l1") * S("l3"));
    const std::vector<Row> table = {
        {{zero, zero, zero}, IdealShape::Augmentation, 0, {X(1), X(2), X(3)}},
        {{S("l1"), zero, zero},
         IdealShape::AxisPoint,
         1,
         {X(1) - NcPoly::constant(alg, S("l1")), X(2), X(3)}},
        {{zero, S("l2"), zero},
         IdealShape::AxisPoint,
         2,
         {X(1), X(2) - NcPoly::constant(alg, S("l2")), X(3)}},
        {{zero, zero, S("l3")},
         IdealShape::AxisPoint,
         3,
         {X(1), X(2), X(3) - NcPoly::constant(alg, S("l3"))}},
        {{S("l1"), S("l2"), zero}, IdealShape::CoordinatePrime, 3, {X(3)}},
        {{S("l1"), zero, S("l3")}, IdealShape::CoordinatePrime, 2, {X(2)}},
        {{zero, S("l2"), S("l3")}, IdealShape::CoordinatePrime, 1, {X(1)}},
        {{S("l1"), S("l2"), S("l3")}, IdealShape::BinomialPrime, 0, {dense_gen}},
    };
    for (std::size_t row = 0; row < table.size(); ++row) {
        auto d = map.map_point(table[row].point);
        if (d.shape != table[row].shape || d.index != table[row].index ||
            d.generators != table[row].generators) {
            return "table row " + std::to_string(row + 1) + " is not reproduced";
        }
    }

    QuotientPoint base = {S("l1"), S("l2"), S("l3")};
    QuotientPoint moved = {S("t1") * S("l1"), S("t1") * S("t3") * S("l2"),
                           S("t3") * S("l3")};
    if (!map.fibre_equal(base, moved)) {
        return "the two-parameter scaling does not preserve the fibre";
    }
    if (map.fibre_equal(base, {S("l1"), S("t1") * S("l2"), S("l3")})) {
        return "an unrelated scaling was accepted into the fibre";
    }

    for (int i = 1; i <= 3; ++i) {
        auto rep = map.preimage_closed_check(i);
        if (!rep.closed || rep.locus != "l" + std::to_string(i) + " = 0") {
            return "the preimage of {ideal contains x" + std::to_string(i) +
                   "} is not the vanishing locus";
        }
    }
    return {};
}

std::string criterion_catalog() {
    auto cat = catalog_data();
    if (cat.size() != 3) return "expected three recorded entries";
    for (const auto& entry : cat) {
        if (entry.source != "recorded") return "an entry is not tagged as recorded";
        if (entry.description.empty()) return "an entry lacks a description";
    }
    if (cat[0].n != 2 || cat[0].values != std::vector<long long>{14}) {
        return "the 2x2 entry should record the single total 14";
    }
    const std::vector<long long> three = {1, 49, 144, 36, 230};
    if (cat[1].n != 3 || cat[1].values != three) {
        return "the 3x3 entry should record 1,49,144,36 with total 230";
    }
    if (cat[1].values[0] + cat[1].values[1] + cat[1].values[2] + cat[1].values[3] !=
        cat[1].values[4]) {
        return "the 3x3 per-rank values do not sum to the recorded total";
    }
    if (cat[1].values[0] + cat[1].values[1] != rank_le1_count(3).count) {
        return "recorded rank 0+1 totals disagree with the computed count";
    }
    if (cat[2].n != 4 || cat[2].values != std::vector<long long>{6902}) {
        return "the 4x4 entry should record the single total 6902";
    }
    return {};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"defining relations straighten to zero and all generator triples "
         "associate (plane, 3-variable multiparameter, 2x2, 3x3 matrices)",
         10.0, criterion_relations},
        {"the quantum determinant is central for n=2 and n=3", 30.0,
         criterion_centrality},
        {"the determinant is grouplike with counit 1 (n=2,3) and "
         "comultiplication is coassociative on generators (n=2)",
         60.0, criterion_bialgebra},
        {"the level-t quotient of the tensor square annihilates every t x t "
         "minor (n<=3, all t)",
         60.0, criterion_mu_star},
        {"stratum reports: ranks 0,1,1,0 for two variables, 2^n strata, and "
         "center basis (1,-1,1) for three variables",
         5.0, criterion_strata},
        {"closure patterns equal the staircase parametrization (n<=3) and "
         "every pattern quotient keeps its surviving generators",
         60.0, criterion_patterns},
        {"distinct rank<=1 determinantal ideals number (2^n-1)^2+1 for "
         "2<=n<=6",
         10.0, criterion_rank_le1},
        {"twisted products obey the commutation matrix (n<=4) and the cocycle "
         "identity on 100 sampled triples",
         5.0, criterion_twist},
        {"the point-to-ideal table, fibre identity, and coordinate preimages "
         "of quantum affine 3-space",
         10.0, criterion_quotient_map},
        {"the recorded catalog is consistent and stays tagged as recorded",
         10.0, criterion_catalog},
    };

    bool all_ok = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        try {
            detail = c.fn();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();

        const bool in_budget = seconds < c.budget_seconds;
        const bool ok = detail.empty() && in_budget;
        all_ok = all_ok && ok;

        std::cout << (ok ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << c.name << " ("
                  << std::fixed << std::setprecision(2) << seconds
                  << (in_budget ? "s < " : "s >= ") << std::setprecision(0)
                  << c.budget_seconds << "s)";
        if (!detail.empty()) std::cout << " -- " << detail;
        std::cout << "\n";
    }
    std::cout << (all_ok ? "acceptance: all criteria passed"
                         : "acceptance: FAILURES PRESENT")
              << "\n";
    return all_ok ? 0 : 1;
}
