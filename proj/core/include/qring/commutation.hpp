#pragma once

#include <vector>

#include "qring/scalar.hpp"

namespace qring {

// Commutation data of a quantum affine space / quantum torus on n generators:
// x_i x_j = q_ij x_j x_i with q_ij a product of formal parameters,
// q_ij = prod_t param_t^{E_t[i][j]}. Each exponent matrix E_t is integer
// antisymmetric, which is the exponent form of "multiplicatively
// antisymmetric" (q_ii = 1, q_ji = q_ij^{-1}). Indices are 0-based here.
class CommutationSpec {
public:
    using IntMatrix = std::vector<std::vector<int>>;

    CommutationSpec(int n, ParamSpacePtr params, std::vector<IntMatrix> exponents);

    int n() const noexcept { return n_; }
    const ParamSpacePtr& params() const noexcept { return params_; }
    const std::vector<IntMatrix>& exponents() const noexcept { return exponents_; }

    // q_ij as a unit scalar.
    Scalar q(int i, int j) const;

    // Single parameter "q" with q_ij = q for i < j.
    static CommutationSpec single_parameter(int n);
    // Same commutation data expressed over a caller-supplied space through
    // the named parameter (which may be a square alias, e.g. q = p^2).
    static CommutationSpec single_parameter(int n, ParamSpacePtr space,
                                            const std::string& name);
    // Independent parameters qIJ for i < j (names "q12", "q13", ...).
    static CommutationSpec multiparameter(int n);
    // All q_ij = 1 over the given space (default: empty space).
    static CommutationSpec commutative(int n, ParamSpacePtr space = nullptr);
    // From an explicit matrix of unit scalars with coefficient 1.
    // Rejects q_ii != 1 and q_ji != q_ij^{-1}.
    static CommutationSpec from_scalar_matrix(const std::vector<std::vector<Scalar>>& m);

    // Restriction to the 0-based generator indices in `keep` (order kept).
    CommutationSpec restricted(const std::vector<int>& keep) const;
    // Relabeling by a permutation: new generator i is old generator perm[i].
    CommutationSpec relabeled(const std::vector<int>& perm) const;

private:
    int n_;
    ParamSpacePtr params_;
    std::vector<IntMatrix> exponents_;  // one antisymmetric n x n matrix per parameter
};

}  // namespace qring
