#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qring {

// Subset of the n x n generator grid, stored as a bitmask with bit
// (i-1)*n + (j-1) for cell (i,j), 1-based. n <= 8.
class GridPattern {
public:
    explicit GridPattern(int n, std::uint64_t mask = 0);
    static GridPattern from_cells(int n, const std::vector<std::pair<int, int>>& cells);

    int n() const noexcept { return n_; }
    std::uint64_t mask() const noexcept { return mask_; }

    bool contains(int i, int j) const;
    GridPattern with(int i, int j) const;
    std::size_t size() const noexcept;

    // Cells in row-major ascending order, 1-based.
    std::vector<std::pair<int, int>> cells() const;
    // Flat 0-based generator indices (row-major), matching the generator
    // order of the n x n quantum matrix presentation.
    std::vector<int> generator_indices() const;

    GridPattern transposed() const;

    // Bullet grid, one row per line.
    std::string ascii() const;

    bool operator==(const GridPattern& o) const = default;
    bool operator<(const GridPattern& o) const {
        return n_ != o.n_ ? n_ < o.n_ : mask_ < o.mask_;
    }

private:
    int n_;
    std::uint64_t mask_;
};

// Closure condition on a cell set X: every (i,j) in X must have its full row,
// its full column, its southwest cone {(l,m) : l >= i, m <= j}, or its
// northeast cone {(l,m) : l <= i, m >= j} contained in X. Equivalently, X is
// a union of full rows, full columns, a southwest-closed set and a
// northeast-closed set; these are exactly the generator subsets that generate
// torus-stable primes of the quantum matrix algebra.
bool is_star(const GridPattern& p);

// All patterns on the n x n grid satisfying the closure condition, in
// ascending bitmask order. Exhaustive over 2^(n^2) subsets; n <= 5.
std::vector<GridPattern> enumerate_star(int n);

// Parametrization data: a pattern is specified by row set I, column set J,
// and nondecreasing staircase functions
//   f : {1..n}\J -> {2..n+1}\I   and   g : {1..n}\I -> {2..n+1}\J.
struct IJfgData {
    int n = 0;
    std::vector<int> I;  // ascending subset of {1..n}
    std::vector<int> J;  // ascending subset of {1..n}
    std::vector<int> f;  // values on sorted({1..n}\J)
    std::vector<int> g;  // values on sorted({1..n}\I)

    void validate() const;
};

// The union of four clauses:
//   {(i,j) : i in I}  u  {(i,j) : i notin I, j notin J, i >= f(j)}
//   u {(i,j) : j in J}  u  {(i,j) : i notin I, j notin J, j >= g(i)}.
// The result always satisfies the closure condition.
GridPattern pattern_from_IJfg(const IJfgData& d);

struct ParametrizationReport {
    int n = 0;
    std::size_t star_count = 0;
    std::size_t image_count = 0;
    bool equal = false;
    std::vector<GridPattern> missing;  // closure patterns not hit by any (I,J,f,g)
    std::vector<GridPattern> extra;    // images violating the closure condition
};

// Exhaustively compares enumerate_star(n) with the set of images of
// pattern_from_IJfg over all valid data. n <= 4.
ParametrizationReport verify_parametrization(int n);

struct RankLe1Count {
    int n = 0;
    long long count = 0;          // distinct saturated generator-data sets
    long long formula = 0;        // (2^n - 1)^2 + 1
    bool matches_formula = false;
    std::string note;
};

// Counts the distinct ideals generated by all 2x2 quantum minors together
// with the rows in R and columns in C, over all pairs (R, C). Two pairs give
// the same ideal exactly when their saturated cell sets
// {(i,j) : i in R or j in C} coincide (a full R or full C saturates to the
// whole grid). n <= 6.
RankLe1Count rank_le1_count(int n);

// Reference counts quoted from the source material, not recomputed here.
// Entries are tagged "recorded"; cross-checks in the test suite assert only
// internal consistency (sums, partial agreement with computed values).
struct CatalogEntry {
    int n = 0;
    std::string description;
    std::vector<long long> values;
    std::string source;  // always "recorded"
};

std::vector<CatalogEntry> catalog_data();

}  // namespace qring
