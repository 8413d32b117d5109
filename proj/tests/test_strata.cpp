#include <doctest.h>

#include <algorithm>
#include <random>

#include <qring/strata.hpp>

using namespace qring;

namespace {

// Independent rank oracle: stack all exponent matrices into one matrix over
// the rationals and run plain Gaussian elimination. The kernel rank of the
// commutation data is then n minus this rank, by rank-nullity.
int stacked_rank_oracle(const CommutationSpec& c) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& E : c.exponents()) {
        for (int j = 0; j < c.n(); ++j) {
            std::vector<Rational> col(c.n());
            for (int i = 0; i < c.n(); ++i) col[i] = E[i][j];
            rows.push_back(std::move(col));
        }
    }
    int rank = 0;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < static_cast<std::size_t>(c.n()) &&
                              lead < rows.size();
         ++col) {
        std::size_t pivot = lead;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[lead], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != lead && rows[r][col] != 0) {
                Rational f = rows[r][col] / rows[lead][col];
                for (int k = 0; k < c.n(); ++k) rows[r][k] -= f * rows[lead][k];
            }
        }
        ++lead;
        ++rank;
    }
    return rank;
}

// Checks a basis row the long way: the central monomial condition is that
// x^a commutes with every generator, i.e. prod_i q(i,j)^{a_i} == 1 for all j.
bool commutes_with_all(const CommutationSpec& c, const LatticeRow& a) {
    for (int j = 0; j < c.n(); ++j) {
        Scalar prod = Scalar::one(c.params());
        for (int i = 0; i < c.n(); ++i) {
            prod *= c.q(i, j).pow(static_cast<int>(a[i]));
        }
        if (!prod.is_one()) return false;
    }
    return true;
}

bool rows_independent(const std::vector<LatticeRow>& rows, int n) {
    if (rows.empty()) return true;
    std::vector<std::vector<Rational>> m;
    for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
    int rank = 0;
    std::size_t lead = 0;
    for (int col = 0; col < n && lead < m.size(); ++col) {
        std::size_t pivot = lead;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[lead], m[pivot]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r != lead && m[r][col] != 0) {
                Rational f = m[r][col] / m[lead][col];
                for (int k = 0; k < n; ++k) m[r][k] -= f * m[lead][k];
            }
        }
        ++lead;
        ++rank;
    }
    return rank == static_cast<int>(rows.size());
}

}  // namespace

TEST_CASE("kernel rank matches the rational rank oracle") {
    for (int n = 2; n <= 6; ++n) {
        auto c = CommutationSpec::single_parameter(n);
        auto basis = center_lattice(c);
        CHECK(static_cast<int>(basis.size()) == n - stacked_rank_oracle(c));
        for (const auto& row : basis) CHECK(commutes_with_all(c, row));
        CHECK(rows_independent(basis, n));
    }
    for (int n = 2; n <= 5; ++n) {
        auto c = CommutationSpec::multiparameter(n);
        auto basis = center_lattice(c);
        CHECK(static_cast<int>(basis.size()) == n - stacked_rank_oracle(c));
        for (const auto& row : basis) CHECK(commutes_with_all(c, row));
    }
}

TEST_CASE("kernel rank oracle agrees on random two-parameter data") {
    std::mt19937 rng(20240517);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int trial = 0; trial < 24; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 3);
        std::vector<CommutationSpec::IntMatrix> forms;
        for (int t = 0; t < 2; ++t) {
            CommutationSpec::IntMatrix E(n, std::vector<int>(n, 0));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    E[i][j] = entry(rng);
                    E[j][i] = -E[i][j];
                }
            forms.push_back(std::move(E));
        }
        CommutationSpec c(n, make_param_space({"s", "t"}), forms);
        auto basis = center_lattice(c);
        CHECK(static_cast<int>(basis.size()) == n - stacked_rank_oracle(c));
        for (const auto& row : basis) CHECK(commutes_with_all(c, row));
        CHECK(rows_independent(basis, n));
    }
}

TEST_CASE("single-parameter centers alternate with parity") {
    // Even n: trivial center. Odd n: rank one, alternating-sign generator.
    for (int n = 2; n <= 6; ++n) {
        auto basis = center_lattice(CommutationSpec::single_parameter(n));
        if (n % 2 == 0) {
            CHECK(basis.empty());
        } else {
            REQUIRE(basis.size() == 1);
            LatticeRow expect(n);
            for (int i = 0; i < n; ++i) expect[i] = (i % 2 == 0) ? 1 : -1;
            CHECK(basis[0] == expect);
        }
    }
}

TEST_CASE("commutative data has the full lattice as center") {
    auto basis = center_lattice(CommutationSpec::commutative(3));
    REQUIRE(basis.size() == 3);
    // Canonical Hermite basis of Z^3 is the identity.
    CHECK(basis[0] == LatticeRow{1, 0, 0});
    CHECK(basis[1] == LatticeRow{0, 1, 0});
    CHECK(basis[2] == LatticeRow{0, 0, 1});
}

TEST_CASE("center rank is invariant under generator relabeling") {
    auto c = CommutationSpec::multiparameter(4);
    auto base = center_lattice(c).size();
    CHECK(center_lattice(c.relabeled({2, 0, 3, 1})).size() == base);
    CHECK(center_lattice(c.relabeled({3, 2, 1, 0})).size() == base);
}

TEST_CASE("stratum reports cover every generator subset") {
    auto reports = strata_report(CommutationSpec::single_parameter(2));
    REQUIRE(reports.size() == 4);

    CHECK(reports[0].w.empty());
    CHECK(reports[0].torus_rank == 2);
    CHECK(reports[0].center_rank == 0);

    CHECK(reports[1].w == std::vector<int>{1});
    CHECK(reports[1].torus_rank == 1);
    CHECK(reports[1].center_rank == 1);
    CHECK(reports[1].center_basis == std::vector<LatticeRow>{{1}});

    CHECK(reports[2].w == std::vector<int>{2});
    CHECK(reports[2].center_rank == 1);

    CHECK(reports[3].w == std::vector<int>{1, 2});
    CHECK(reports[3].torus_rank == 0);
    CHECK(reports[3].center_rank == 0);
}

TEST_CASE("stratum count is exponential and ranks are complement kernels") {
    for (int n = 2; n <= 5; ++n) {
        auto c = CommutationSpec::single_parameter(n);
        auto reports = strata_report(c);
        CHECK(reports.size() == (static_cast<std::size_t>(1) << n));
        for (const auto& r : reports) {
            CHECK(r.torus_rank == n - static_cast<int>(r.w.size()));
            // Re-derive the stratum kernel directly from the restriction.
            std::vector<int> keep;
            for (int g = 1; g <= n; ++g) {
                if (std::find(r.w.begin(), r.w.end(), g) == r.w.end())
                    keep.push_back(g - 1);
            }
            auto sub = c.restricted(keep);
            CHECK(r.center_rank ==
                  r.torus_rank - stacked_rank_oracle(sub));
        }
    }
}

TEST_CASE("primitive profiles summarize the Laurent center") {
    auto reports = strata_report(CommutationSpec::single_parameter(2));
    auto p0 = primitive_profile(reports[0]);
    CHECK(p0.single_prime);
    CHECK(p0.laurent_rank == 0);
    auto p1 = primitive_profile(reports[1]);
    CHECK(!p1.single_prime);
    CHECK(p1.laurent_rank == 1);
    CHECK(!p1.description.empty());
}
