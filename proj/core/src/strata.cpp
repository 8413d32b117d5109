#include "qring/strata.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace qring {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigMatrix = std::vector<std::vector<BigInt>>;

// Integer kernel of M (rows x cols): unimodular column operations drive M to
// column echelon form while the same operations act on an identity block; the
// identity columns under the zeroed-out echelon columns are a lattice basis
// of { a : M a = 0 }. Kernels are saturated, so this basis is exact.
std::vector<std::vector<BigInt>> integer_kernel(const BigMatrix& m, std::size_t cols) {
    const std::size_t rows = m.size();
    BigMatrix top = m;
    BigMatrix bottom(cols, std::vector<BigInt>(cols, 0));
    for (std::size_t i = 0; i < cols; ++i) bottom[i][i] = 1;

    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (auto& row : top) std::swap(row[a], row[b]);
        for (auto& row : bottom) std::swap(row[a], row[b]);
    };
    auto axpy_col = [&](std::size_t dst, std::size_t src, const BigInt& f) {
        // column dst -= f * column src
        for (auto& row : top) row[dst] -= f * row[src];
        for (auto& row : bottom) row[dst] -= f * row[src];
    };

    std::size_t pivot = 0;
    for (std::size_t r = 0; r < rows && pivot < cols; ++r) {
        // Euclidean elimination across columns pivot..cols-1 in row r.
        while (true) {
            std::size_t best = cols;
            for (std::size_t j = pivot; j < cols; ++j) {
                if (top[r][j] == 0) continue;
                if (best == cols || abs(top[r][j]) < abs(top[r][best])) best = j;
            }
            if (best == cols) break;  // row already clear
            swap_cols(pivot, best);
            bool reduced_all = true;
            for (std::size_t j = pivot + 1; j < cols; ++j) {
                if (top[r][j] == 0) continue;
                BigInt f = top[r][j] / top[r][pivot];
                if (f != 0) axpy_col(j, pivot, f);
                if (top[r][j] != 0) reduced_all = false;
            }
            if (reduced_all) break;
        }
        if (top[r][pivot] != 0) ++pivot;
    }

    std::vector<std::vector<BigInt>> kernel;
    for (std::size_t j = pivot; j < cols; ++j) {
        std::vector<BigInt> v(cols);
        for (std::size_t i = 0; i < cols; ++i) v[i] = bottom[i][j];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

// Canonical basis of the lattice spanned by the given rows: row Hermite form
// with positive pivots and entries above each pivot reduced into [0, pivot).
std::vector<std::vector<BigInt>> row_hermite(std::vector<std::vector<BigInt>> rows,
                                             std::size_t cols) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
            }
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            bool clear = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                BigInt f = rows[i][c] / rows[r][c];
                if (f != 0) {
                    for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
                }
                if (rows[i][c] != 0) clear = false;
            }
            if (clear) break;
        }
        if (rows[r][c] == 0) continue;
        if (rows[r][c] < 0) {
            for (auto& x : rows[r]) x = -x;
        }
        // Reduce the entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < r; ++i) {
            BigInt f = rows[i][c] / rows[r][c];
            if (rows[i][c] - f * rows[r][c] < 0) f -= 1;
            if (f != 0) {
                for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
            }
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

}  // namespace

std::vector<LatticeRow> center_lattice(const CommutationSpec& c) {
    const std::size_t n = static_cast<std::size_t>(c.n());
    // One constraint row per (parameter, generator j) pair: M[(t,j)][i] = E_t[i][j].
    BigMatrix m;
    for (const auto& e : c.exponents()) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<BigInt> row(n);
            for (std::size_t i = 0; i < n; ++i) row[i] = e[i][j];
            m.push_back(std::move(row));
        }
    }
    auto basis = row_hermite(integer_kernel(m, n), n);
    std::vector<LatticeRow> out;
    out.reserve(basis.size());
    for (const auto& v : basis) {
        LatticeRow row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = static_cast<long long>(v[i]);
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<StratumReport> strata_report(const CommutationSpec& c) {
    const int n = c.n();
    std::vector<StratumReport> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        StratumReport rep;
        std::vector<int> keep;
        for (int i = 0; i < n; ++i) {
            if (mask >> i & 1) {
                rep.w.push_back(i + 1);
            } else {
                keep.push_back(i);
            }
        }
        rep.torus_rank = static_cast<int>(keep.size());
        rep.center_basis = center_lattice(c.restricted(keep));
        rep.center_rank = static_cast<int>(rep.center_basis.size());
        out.push_back(std::move(rep));
    }
    return out;
}

PrimitiveProfile primitive_profile(const StratumReport& r) {
    PrimitiveProfile p;
    p.w = r.w;
    p.laurent_rank = r.center_rank;
    p.single_prime = (r.center_rank == 0);
    std::ostringstream os;
    os << "stratum over w={";
    for (std::size_t i = 0; i < r.w.size(); ++i) {
        if (i) os << ",";
        os << r.w[i];
    }
    os << "}: ";
    if (p.single_prime) {
        os << "a single prime, hence primitive";
    } else {
        os << "homeomorphic to the spectrum of a Laurent polynomial ring in "
           << p.laurent_rank
           << (p.laurent_rank == 1 ? " variable" : " variables")
           << "; primitives correspond to its maximal ideals";
    }
    p.description = os.str();
    return p;
}

}  // namespace qring
