#pragma once

#include <set>

#include "qring/hom.hpp"

namespace qring {

// Row/column index sets of a quantum minor: strictly increasing, equal size,
// entries in 1..n.
struct MinorIndex {
    std::vector<int> rows;
    std::vector<int> cols;

    void validate(int n) const;
    std::size_t size() const noexcept { return rows.size(); }
};

// The quantum determinant D_q: sum over all permutations pi of the row-sorted
// product X[1,pi(1)]...X[n,pi(n)] weighted by (-q)^{inversions(pi)}.
// Row-sorted products are already in normal form, so no straightening happens.
NcPoly qdet(const PresentationPtr& mat);

// Quantum minor [I|J]: the t x t quantum determinant pushed through the index
// embedding X[l,m] -> X[i_l, j_m], then re-normalized.
NcPoly qminor(const PresentationPtr& mat, const MinorIndex& idx);

// True iff p commutes with every generator of its presentation.
bool is_central(const NcPoly& p);

// Comultiplication data: the tensor-square presentation together with the
// verified-by-construction map X[i,j] -> sum_l X[i,l] (x) X'[l,j].
struct DeltaHom {
    PresentationPtr tensor;
    AlgebraHom hom;
};
DeltaHom delta_hom(const PresentationPtr& mat);

// Convenience: Delta(p) in a freshly built tensor square.
NcPoly delta(const NcPoly& p);

// Counit: X[i,j] -> (i == j ? 1 : 0), extended multiplicatively and linearly.
Scalar counit(const NcPoly& p);

// mu*_q at level t: Delta followed by killing the left-copy generators with
// column >= t and the right-copy generators with row >= t.
struct MuStarHom {
    PresentationPtr tensor;
    PresentationPtr target;
    AlgebraHom hom;  // source algebra -> quotient of the tensor square
};
MuStarHom mu_q_star_hom(const PresentationPtr& mat, int t);
NcPoly mu_q_star(const NcPoly& p, int t);

// Generator list of the rank <= 1 determinantal family: every 2x2 quantum
// minor, plus the generators of the listed rows and columns (1-based).
std::vector<NcPoly> detgen_rank_le1(const PresentationPtr& mat,
                                    const std::set<int>& rows,
                                    const std::set<int>& cols);

}  // namespace qring
