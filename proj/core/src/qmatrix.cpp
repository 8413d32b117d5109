#include "qring/qmatrix.hpp"

#include <algorithm>
#include <numeric>

#include "qring/errors.hpp"

namespace qring {

namespace {

void require_matrix_kind(const PresentationPtr& p) {
    if (p->kind() != AlgebraKind::QuantumMatrices)
        throw MismatchError("operation requires a quantum-matrix presentation");
}

int inversions(const std::vector<int>& perm) {
    int inv = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b]) ++inv;
    return inv;
}

// Sum over permutations pi of (-q)^{inv(pi)} X[rows[0], cols[pi(0)]] ... ,
// with generator indices taken from an n x n grid.
NcPoly permutation_sum(const PresentationPtr& mat, const std::vector<int>& rows,
                       const std::vector<int>& cols) {
    const int n = mat->n();
    const int t = static_cast<int>(rows.size());
    const Scalar q = Scalar::param(mat->params(), "q");
    TermMap terms;
    std::vector<int> perm(t);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inv = inversions(perm);
        Monomial m(mat->num_gens(), 0);
        for (int l = 0; l < t; ++l)
            m[(rows[l] - 1) * n + (cols[perm[l]] - 1)] += 1;
        Scalar coeff = q.pow(inv);
        if (inv % 2 == 1) coeff = -coeff;
        terms.emplace(std::move(m), std::move(coeff));
    } while (std::next_permutation(perm.begin(), perm.end()));
    // Row-sorted products are sorted monomials; normalize anyway to keep the
    // "re-normalized, not assumed" contract cheap and explicit.
    NcPoly acc = NcPoly::zero(mat);
    for (const auto& [m, s] : terms)
        acc = acc + NcPoly::from_word(mat, mat->expand(m), s);
    return acc;
}

}  // namespace

void MinorIndex::validate(int n) const {
    if (rows.size() != cols.size())
        throw MismatchError("minor row and column index sets differ in size");
    if (rows.empty()) throw MismatchError("empty minor index sets");
    for (const auto* v : {&rows, &cols}) {
        for (std::size_t k = 0; k < v->size(); ++k) {
            if ((*v)[k] < 1 || (*v)[k] > n)
                throw MismatchError("minor index out of range 1..n");
            if (k > 0 && (*v)[k] <= (*v)[k - 1])
                throw MismatchError("minor index sets must be strictly increasing");
        }
    }
}

NcPoly qdet(const PresentationPtr& mat) {
    require_matrix_kind(mat);
    std::vector<int> all(mat->n());
    std::iota(all.begin(), all.end(), 1);
    return permutation_sum(mat, all, all);
}

NcPoly qminor(const PresentationPtr& mat, const MinorIndex& idx) {
    require_matrix_kind(mat);
    idx.validate(mat->n());
    return permutation_sum(mat, idx.rows, idx.cols);
}

bool is_central(const NcPoly& p) {
    const auto& pres = p.presentation();
    for (std::size_t g = 0; g < pres->num_gens(); ++g)
        if (!commutator(p, NcPoly::generator(pres, static_cast<int>(g))).is_zero())
            return false;
    return true;
}

DeltaHom delta_hom(const PresentationPtr& mat) {
    require_matrix_kind(mat);
    const int n = mat->n();
    PresentationPtr tensor = tensor_square(mat);
    const int offset = tensor->tensor_split();
    std::vector<NcPoly> images;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            TermMap terms;
            for (int l = 0; l < n; ++l) {
                Monomial m(tensor->num_gens(), 0);
                m[i * n + l] = 1;
                m[offset + l * n + j] = 1;
                terms.emplace(std::move(m), Scalar::one(tensor->params()));
            }
            images.push_back(NcPoly::from_terms(tensor, std::move(terms)));
        }
    }
    return {tensor, AlgebraHom(mat, tensor, std::move(images))};
}

NcPoly delta(const NcPoly& p) {
    DeltaHom d = delta_hom(p.presentation());
    return d.hom.apply(p);
}

Scalar counit(const NcPoly& p) {
    const auto& pres = p.presentation();
    require_matrix_kind(pres);
    const int n = pres->n();
    Scalar acc = Scalar::zero(pres->params());
    for (const auto& [m, s] : p.terms()) {
        bool diagonal = true;
        for (std::size_t g = 0; g < m.size(); ++g) {
            if (m[g] > 0 && static_cast<int>(g) / n != static_cast<int>(g) % n) {
                diagonal = false;
                break;
            }
        }
        if (diagonal) acc += s;
    }
    return acc;
}

MuStarHom mu_q_star_hom(const PresentationPtr& mat, int t) {
    require_matrix_kind(mat);
    const int n = mat->n();
    if (t < 1 || t > n) throw MismatchError("mu*_q level t out of range 1..n");
    DeltaHom d = delta_hom(mat);
    const int offset = d.tensor->tensor_split();
    std::set<int> deleted;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j + 1 >= t) deleted.insert(i * n + j);            // left copy, column >= t
            if (i + 1 >= t) deleted.insert(offset + i * n + j);   // right copy, row >= t
        }
    QuotientResult quo = quotient_by_generators(d.tensor, deleted);
    AlgebraHom hom = compose(quo.projection, d.hom);
    return {d.tensor, quo.quotient, std::move(hom)};
}

NcPoly mu_q_star(const NcPoly& p, int t) {
    MuStarHom mu = mu_q_star_hom(p.presentation(), t);
    return mu.hom.apply(p);
}

std::vector<NcPoly> detgen_rank_le1(const PresentationPtr& mat,
                                    const std::set<int>& rows,
                                    const std::set<int>& cols) {
    require_matrix_kind(mat);
    const int n = mat->n();
    for (const auto* s : {&rows, &cols})
        for (int v : *s)
            if (v < 1 || v > n) throw MismatchError("row/column index out of range 1..n");
    std::vector<NcPoly> gens;
    if (n >= 2) {
        for (int i1 = 1; i1 <= n; ++i1)
            for (int i2 = i1 + 1; i2 <= n; ++i2)
                for (int j1 = 1; j1 <= n; ++j1)
                    for (int j2 = j1 + 1; j2 <= n; ++j2)
                        gens.push_back(qminor(mat, {{i1, i2}, {j1, j2}}));
    }
    for (int i : rows)
        for (int j = 1; j <= n; ++j)
            gens.push_back(NcPoly::generator(mat, (i - 1) * n + (j - 1)));
    for (int j : cols)
        for (int i = 1; i <= n; ++i)
            gens.push_back(NcPoly::generator(mat, (i - 1) * n + (j - 1)));
    return gens;
}

}  // namespace qring
