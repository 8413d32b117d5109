#include "qring/patterns.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "qring/errors.hpp"

namespace qring {

namespace {

int bit_index(int n, int i, int j) { return (i - 1) * n + (j - 1); }

void check_cell(int n, int i, int j) {
    if (i < 1 || i > n || j < 1 || j > n) {
        throw Error("cell (" + std::to_string(i) + "," + std::to_string(j) +
                    ") out of range for n=" + std::to_string(n));
    }
}

// Cone and line masks per cell, indexed by bit position.
struct CellMasks {
    std::vector<std::uint64_t> sw;   // {(l,m) : l >= i, m <= j}
    std::vector<std::uint64_t> ne;   // {(l,m) : l <= i, m >= j}
    std::vector<std::uint64_t> row;  // {(i,m) : all m}
    std::vector<std::uint64_t> col;  // {(l,j) : all l}
};

CellMasks cell_masks(int n) {
    CellMasks c;
    c.sw.assign(static_cast<std::size_t>(n) * n, 0);
    c.ne.assign(static_cast<std::size_t>(n) * n, 0);
    c.row.assign(static_cast<std::size_t>(n) * n, 0);
    c.col.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const int b = bit_index(n, i, j);
            for (int l = 1; l <= n; ++l) {
                for (int m = 1; m <= n; ++m) {
                    const std::uint64_t cell = std::uint64_t{1} << bit_index(n, l, m);
                    if (l >= i && m <= j) c.sw[b] |= cell;
                    if (l <= i && m >= j) c.ne[b] |= cell;
                    if (l == i) c.row[b] |= cell;
                    if (m == j) c.col[b] |= cell;
                }
            }
        }
    }
    return c;
}

bool star_mask(std::uint64_t mask, const CellMasks& cm) {
    std::uint64_t rest = mask;
    while (rest) {
        const int b = std::countr_zero(rest);
        rest &= rest - 1;
        if ((mask & cm.sw[b]) != cm.sw[b] && (mask & cm.ne[b]) != cm.ne[b] &&
            (mask & cm.row[b]) != cm.row[b] && (mask & cm.col[b]) != cm.col[b]) {
            return false;
        }
    }
    return true;
}

std::vector<int> complement(int n, const std::vector<int>& s) {
    std::vector<int> out;
    std::size_t k = 0;
    for (int v = 1; v <= n; ++v) {
        if (k < s.size() && s[k] == v) {
            ++k;
        } else {
            out.push_back(v);
        }
    }
    return out;
}

void check_subset(int n, const std::vector<int>& s, const char* label) {
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] < 1 || s[k] > n) {
            throw Error(std::string(label) + " is not a subset of {1..n}");
        }
        if (k > 0 && s[k - 1] >= s[k]) {
            throw Error(std::string(label) + " must be strictly ascending");
        }
    }
}

// Values of a staircase function: defined on `domain`, nondecreasing, each
// value drawn from the ascending list `codomain`.
void check_staircase(const std::vector<int>& domain, const std::vector<int>& codomain,
                     const std::vector<int>& values, const char* label) {
    if (values.size() != domain.size()) {
        throw Error(std::string(label) + " must assign one value per domain element");
    }
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (!std::binary_search(codomain.begin(), codomain.end(), values[k])) {
            throw Error(std::string(label) + " takes a value outside its codomain");
        }
        if (k > 0 && values[k - 1] > values[k]) {
            throw Error(std::string(label) + " must be nondecreasing");
        }
    }
}

std::vector<int> masked_subset(int n, std::uint64_t mask) {
    std::vector<int> s;
    for (int v = 1; v <= n; ++v) {
        if (mask >> (v - 1) & 1) s.push_back(v);
    }
    return s;
}

// All nondecreasing index sequences of the given length into `values`,
// invoking fn on each value sequence.
template <typename Fn>
void for_each_staircase(const std::vector<int>& values, std::size_t length, Fn&& fn) {
    if (length > 0 && values.empty()) return;
    std::vector<int> idx(length, 0);
    std::vector<int> vals(length);
    while (true) {
        for (std::size_t k = 0; k < length; ++k) vals[k] = values[idx[k]];
        fn(vals);
        std::size_t k = length;
        while (k > 0) {
            --k;
            if (idx[k] + 1 < static_cast<int>(values.size())) {
                const int next = idx[k] + 1;
                for (std::size_t m = k; m < length; ++m) idx[m] = next;
                break;
            }
            if (k == 0) return;
        }
        if (length == 0) return;
    }
}

}  // namespace

GridPattern::GridPattern(int n, std::uint64_t mask) : n_(n), mask_(mask) {
    if (n < 1 || n > 8) throw Error("grid size must be between 1 and 8");
    if (n < 8 && mask >> (n * n)) throw Error("pattern mask has bits outside the grid");
}

GridPattern GridPattern::from_cells(int n, const std::vector<std::pair<int, int>>& cells) {
    GridPattern p(n);
    for (const auto& [i, j] : cells) {
        check_cell(n, i, j);
        p.mask_ |= std::uint64_t{1} << bit_index(n, i, j);
    }
    return p;
}

bool GridPattern::contains(int i, int j) const {
    check_cell(n_, i, j);
    return mask_ >> bit_index(n_, i, j) & 1;
}

GridPattern GridPattern::with(int i, int j) const {
    check_cell(n_, i, j);
    GridPattern p = *this;
    p.mask_ |= std::uint64_t{1} << bit_index(n_, i, j);
    return p;
}

std::size_t GridPattern::size() const noexcept {
    return static_cast<std::size_t>(std::popcount(mask_));
}

std::vector<std::pair<int, int>> GridPattern::cells() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            if (mask_ >> bit_index(n_, i, j) & 1) out.emplace_back(i, j);
        }
    }
    return out;
}

std::vector<int> GridPattern::generator_indices() const {
    std::vector<int> out;
    for (int b = 0; b < n_ * n_; ++b) {
        if (mask_ >> b & 1) out.push_back(b);
    }
    return out;
}

GridPattern GridPattern::transposed() const {
    GridPattern p(n_);
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            if (mask_ >> bit_index(n_, i, j) & 1) {
                p.mask_ |= std::uint64_t{1} << bit_index(n_, j, i);
            }
        }
    }
    return p;
}

std::string GridPattern::ascii() const {
    std::ostringstream os;
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            if (j > 1) os << ' ';
            os << (contains(i, j) ? "•" : "∘");
        }
        os << '\n';
    }
    return os.str();
}

bool is_star(const GridPattern& p) {
    return star_mask(p.mask(), cell_masks(p.n()));
}

std::vector<GridPattern> enumerate_star(int n) {
    if (n < 1 || n > 5) {
        throw Error("exhaustive pattern enumeration supports n between 1 and 5");
    }
    const CellMasks cm = cell_masks(n);
    std::vector<GridPattern> out;
    const std::uint64_t total = std::uint64_t{1} << (n * n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (star_mask(mask, cm)) out.push_back(GridPattern(n, mask));
    }
    return out;
}

void IJfgData::validate() const {
    if (n < 1 || n > 8) throw Error("grid size must be between 1 and 8");
    check_subset(n, I, "I");
    check_subset(n, J, "J");
    std::vector<int> shifted(n);
    for (int v = 0; v < n; ++v) shifted[v] = v + 2;  // {2..n+1}
    std::vector<int> cod_f;
    std::set_difference(shifted.begin(), shifted.end(), I.begin(), I.end(),
                        std::back_inserter(cod_f));
    std::vector<int> cod_g;
    std::set_difference(shifted.begin(), shifted.end(), J.begin(), J.end(),
                        std::back_inserter(cod_g));
    check_staircase(complement(n, J), cod_f, f, "f");
    check_staircase(complement(n, I), cod_g, g, "g");
}

GridPattern pattern_from_IJfg(const IJfgData& d) {
    d.validate();
    const int n = d.n;
    std::vector<bool> in_I(n + 1, false), in_J(n + 1, false);
    for (int v : d.I) in_I[v] = true;
    for (int v : d.J) in_J[v] = true;
    // f and g as total maps, n+1 meaning "no cell in this line".
    std::vector<int> fval(n + 1, n + 1), gval(n + 1, n + 1);
    const std::vector<int> dom_f = complement(n, d.J);
    const std::vector<int> dom_g = complement(n, d.I);
    for (std::size_t k = 0; k < dom_f.size(); ++k) fval[dom_f[k]] = d.f[k];
    for (std::size_t k = 0; k < dom_g.size(); ++k) gval[dom_g[k]] = d.g[k];

    GridPattern p(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const bool member =
                in_I[i] || in_J[j] || (i >= fval[j]) || (j >= gval[i]);
            if (member) p = p.with(i, j);
        }
    }
    return p;
}

ParametrizationReport verify_parametrization(int n) {
    if (n < 1 || n > 4) {
        throw Error("parametrization verification supports n between 1 and 4");
    }
    ParametrizationReport rep;
    rep.n = n;

    std::set<GridPattern> images;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t mi = 0; mi < subsets; ++mi) {
        for (std::uint64_t mj = 0; mj < subsets; ++mj) {
            IJfgData d;
            d.n = n;
            d.I = masked_subset(n, mi);
            d.J = masked_subset(n, mj);
            std::vector<int> shifted(n);
            for (int v = 0; v < n; ++v) shifted[v] = v + 2;
            std::vector<int> cod_f, cod_g;
            std::set_difference(shifted.begin(), shifted.end(), d.I.begin(), d.I.end(),
                                std::back_inserter(cod_f));
            std::set_difference(shifted.begin(), shifted.end(), d.J.begin(), d.J.end(),
                                std::back_inserter(cod_g));
            const std::size_t lf = complement(n, d.J).size();
            const std::size_t lg = complement(n, d.I).size();
            for_each_staircase(cod_f, lf, [&](const std::vector<int>& fv) {
                d.f = fv;
                for_each_staircase(cod_g, lg, [&](const std::vector<int>& gv) {
                    d.g = gv;
                    images.insert(pattern_from_IJfg(d));
                });
            });
        }
    }

    const std::vector<GridPattern> stars = enumerate_star(n);
    const std::set<GridPattern> star_set(stars.begin(), stars.end());
    rep.star_count = star_set.size();
    rep.image_count = images.size();
    std::set_difference(star_set.begin(), star_set.end(), images.begin(), images.end(),
                        std::back_inserter(rep.missing));
    std::set_difference(images.begin(), images.end(), star_set.begin(), star_set.end(),
                        std::back_inserter(rep.extra));
    rep.equal = rep.missing.empty() && rep.extra.empty();
    return rep;
}

RankLe1Count rank_le1_count(int n) {
    if (n < 1 || n > 6) throw Error("rank <= 1 counting supports n between 1 and 6");
    RankLe1Count rc;
    rc.n = n;
    rc.formula = (static_cast<long long>((1LL << n) - 1) * ((1LL << n) - 1)) + 1;
    std::set<std::uint64_t> data;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t rmask = 0; rmask < subsets; ++rmask) {
        for (std::uint64_t cmask = 0; cmask < subsets; ++cmask) {
            std::uint64_t cells = 0;
            for (int i = 1; i <= n; ++i) {
                for (int j = 1; j <= n; ++j) {
                    if ((rmask >> (i - 1) & 1) || (cmask >> (j - 1) & 1)) {
                        cells |= std::uint64_t{1} << bit_index(n, i, j);
                    }
                }
            }
            data.insert(cells);
        }
    }
    rc.count = static_cast<long long>(data.size());
    rc.matches_formula = rc.count == rc.formula;
    if (n == 1) {
        rc.note = "degenerate: the 1x1 grid has no 2x2 minors, so the ideals are "
                  "generated by row/column entries alone";
    }
    return rc;
}

std::vector<CatalogEntry> catalog_data() {
    return {
        {2, "total count of torus-stable primes in the 2x2 quantum matrix algebra",
         {14}, "recorded"},
        {3, "3x3 counts by minor rank (0,1,2,3) and their total",
         {1, 49, 144, 36, 230}, "recorded"},
        {4, "total count for the 4x4 quantum matrix algebra",
         {6902}, "recorded"},
    };
}

}  // namespace qring
