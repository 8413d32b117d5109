#pragma once

#include <optional>

#include "qring/ncpoly.hpp"

namespace qring {

using Weight = std::vector<int>;

// Integer-vector grading standing in for a rational torus action: the torus
// (k^x)^r acts with X_g scaled by the character given by weight(g).
struct GradingSpec {
    int rank = 0;
    std::vector<Weight> weights;  // one per generator

    // The grading stored on the presentation itself.
    static GradingSpec from_presentation(const PresentationPtr& p);
    // weight(x_i) = e_i on n generators.
    static GradingSpec affine(int n);
    // weight(X[i,j]) = e_i + f_j in Z^{2n}, row-major generator order.
    static GradingSpec matrix(int n);
    // weight(X[i,j]) = (3-2i, 3-2j): the torus of diagonal 2x2 matrices acting
    // by row/column scaling composed with the determinant-like normalization.
    static GradingSpec sl2_style(int n);

    void validate(const PresentationPtr& p) const;
};

Weight weight_of(const Monomial& m, const GradingSpec& g);

// The common weight of all terms, or nullopt if the terms disagree.
// The zero polynomial is homogeneous of weight zero.
std::optional<Weight> is_homogeneous(const NcPoly& p, const GradingSpec& g);

// Sufficient condition for H-stability of the generated ideal: every listed
// generator is homogeneous. (Generator-level only; not necessary.)
bool h_stable_by_generators(const std::vector<NcPoly>& gens, const GradingSpec& g);

}  // namespace qring
