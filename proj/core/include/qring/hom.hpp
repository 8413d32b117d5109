#pragma once

#include <set>

#include "qring/ncpoly.hpp"

namespace qring {

// Algebra map determined by generator images. Verification substitutes the
// images into every source straightening rule and checks the result
// normalizes to zero in the target.
class AlgebraHom {
public:
    AlgebraHom(PresentationPtr source, PresentationPtr target,
               std::vector<NcPoly> images);

    const PresentationPtr& source() const noexcept { return source_; }
    const PresentationPtr& target() const noexcept { return target_; }
    const std::vector<NcPoly>& images() const noexcept { return images_; }

    NcPoly apply(const NcPoly& p) const;
    // True iff every source rule u*v - lead*v*u - corrections maps to zero.
    bool verify() const;

private:
    PresentationPtr source_;
    PresentationPtr target_;
    std::vector<NcPoly> images_;
};

// outer after inner; images are outer(inner(generator)).
AlgebraHom compose(const AlgebraHom& outer, const AlgebraHom& inner);

// A (x) B on |A|+|B| generators, left copy first; copies commute elementwise.
// Right-copy generator names are primed as needed to stay unique, so applying
// it twice gives positionally identical triple tensors either way.
PresentationPtr tensor_product(const PresentationPtr& a, const PresentationPtr& b);
PresentationPtr tensor_square(const PresentationPtr& a);

// a (x) b as an element of the tensor presentation.
NcPoly tensor_elem(const PresentationPtr& tensor, const NcPoly& left,
                   const NcPoly& right);

struct QuotientResult {
    PresentationPtr quotient;
    AlgebraHom projection;          // deleted generators -> 0, others -> themselves
    std::vector<int> surviving;     // source indices of surviving generators
};

// Quotient by the ideal generated by the listed generators. Requires closure
// consistency: any rule with a corner in S must have every correction monomial
// touch S, otherwise the quotient presentation would silently lose a relation.
// Throws ClosureError naming the offending relation.
QuotientResult quotient_by_generators(const PresentationPtr& a,
                                      const std::set<int>& deleted);

}  // namespace qring
