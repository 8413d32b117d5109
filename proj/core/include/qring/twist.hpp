#pragma once

#include <array>
#include <set>

#include "qring/commutation.hpp"
#include "qring/ncpoly.hpp"

namespace qring {

// Bilinear 2-cocycle on Z^n with values in the scalar units:
// c(a,b) = prod_t param_t^{a^T B_t b}. Bilinearity makes the cocycle identity
// c(a,b)c(a+b,g) = c(b,g)c(a,b+g) hold on the nose and gives c(a,0)=c(0,b)=1.
class CocycleSpec {
public:
    using IntMatrix = std::vector<std::vector<int>>;

    CocycleSpec(int n, ParamSpacePtr params, std::vector<IntMatrix> forms);

    int n() const noexcept { return n_; }
    const ParamSpacePtr& params() const noexcept { return params_; }
    const std::vector<IntMatrix>& forms() const noexcept { return forms_; }

    Scalar eval(const std::vector<int>& a, const std::vector<int>& b) const;
    // Antisymmetrization c(e_i,e_j) c(e_j,e_i)^{-1}; 0-based indices.
    Scalar q(int i, int j) const;

    CocycleSpec inverse() const;   // pointwise c^{-1}
    CocycleSpec opposite() const;  // (a,b) -> c(b,a)

private:
    int n_;
    ParamSpacePtr params_;
    std::vector<IntMatrix> forms_;  // one n x n bilinear form per parameter
};

// The upper-triangular choice B_t[i][j] = E_t[i][j] for i < j (0 otherwise),
// which realizes c(e_i,e_j)c(e_j,e_i)^{-1} = q_ij.
CocycleSpec standard_cocycle(const CommutationSpec& c);

// Element of a commutative monomial algebra: exponent vector -> coefficient,
// kept in the graded term order. Printing uses generator names y1..yn to
// keep twisted elements visually apart from PBW elements.
class CommElem {
public:
    CommElem() = default;
    CommElem(int n, ParamSpacePtr space) : n_(n), space_(std::move(space)) {}

    int n() const noexcept { return n_; }
    const ParamSpacePtr& space() const noexcept { return space_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    CommElem operator-() const;
    CommElem operator+(const CommElem& o) const;
    CommElem operator-(const CommElem& o) const;
    CommElem scaled(const Scalar& s) const;

    bool operator==(const CommElem& o) const;
    bool operator!=(const CommElem& o) const { return !(*this == o); }

    std::string str() const;

    void add_term(const Monomial& m, const Scalar& s);

private:
    void check_compatible(const CommElem& o) const;

    int n_ = 0;
    ParamSpacePtr space_;
    TermMap terms_;
};

// A commutative N^n monomial algebra carrying a cocycle, with the twisted
// product r*s = c(a,b)rs on homogeneous components. Either the full
// polynomial ring, or a degree-truncated affine semigroup algebra whose basis
// is every sum of at most `degree_bound` semigroup generators.
class TwistedAlgebra {
public:
    static TwistedAlgebra polynomial_ring(CocycleSpec c);
    static TwistedAlgebra semigroup_algebra(CocycleSpec c,
                                            std::vector<std::vector<int>> semigroup_gens,
                                            int degree_bound);

    const CocycleSpec& cocycle() const noexcept { return cocycle_; }
    int n() const noexcept { return cocycle_.n(); }
    bool truncated() const noexcept { return truncated_; }

    // Does the exponent vector name a basis monomial of this algebra?
    bool admits(const Monomial& m) const;

    CommElem zero() const;
    CommElem one() const;
    CommElem generator(int i) const;  // 0-based
    CommElem monomial(Monomial m, Scalar coeff) const;

private:
    explicit TwistedAlgebra(CocycleSpec c) : cocycle_(std::move(c)) {}

    CocycleSpec cocycle_;
    bool truncated_ = false;
    std::set<Monomial> basis_;  // only when truncated
};

// Twisted product, termwise over homogeneous components. Throws MismatchError
// ("degree bookkeeping mismatch") when an operand or product monomial falls
// outside the algebra's basis.
CommElem twist_product(const CommElem& r, const CommElem& s, const TwistedAlgebra& t);

// Basis-preserving linear map from a pure q-commutation algebra to the
// commutative basis. It intertwines the PBW product with the twisted product
// for the cocycle c.opposite().inverse(): straightening x^a x^b picks up
// q_ij^{-a_j b_i} over pairs i<j, which is c(b,a)^{-1}, not c(a,b)^{-1}.
// The presentation must be correction-free with leads matching the
// antisymmetrization of the algebra's cocycle.
CommElem phi_c(const NcPoly& p, const TwistedAlgebra& t);
NcPoly phi_c_inverse(const CommElem& e, const PresentationPtr& pres,
                     const TwistedAlgebra& t);

// Shapes of the point-to-prime table of the three-variable quotient map.
enum class IdealShape { Augmentation, AxisPoint, CoordinatePrime, BinomialPrime };

struct IdealDescriptor {
    IdealShape shape = IdealShape::Augmentation;
    int index = 0;  // axis i for AxisPoint, killed coordinate k for CoordinatePrime
    std::vector<NcPoly> generators;

    std::string str() const;
};

using QuotientPoint = std::array<Scalar, 3>;

// The explicit quotient map from classical affine 3-space onto the primitive
// ideals of the single-parameter quantum affine 3-space, with q = p^2 so the
// dense case's coefficient p is available. Points may have symbolic
// coordinates; a coordinate counts as zero exactly when it is the zero
// scalar, so formal parameters are "nonzero" by construction.
class QuotientMap3 {
public:
    explicit QuotientMap3(ParamSpacePtr space);
    // Parameter space {p, l1, l2, l3} with q = p^2.
    static QuotientMap3 standard();

    const ParamSpacePtr& space() const noexcept { return space_; }
    const PresentationPtr& algebra() const noexcept { return algebra_; }

    // Point with coordinates (l1, l2, l3) as formal parameters.
    QuotientPoint symbolic_point() const;

    IdealDescriptor map_point(const QuotientPoint& pt) const;

    // Same image ideal? Descriptor comparison; in the dense case this is the
    // generator-proportionality identity mu2*l1*l3 = l2*mu1*mu3.
    bool fibre_equal(const QuotientPoint& a, const QuotientPoint& b) const;

    struct PreimageReport {
        int generator = 0;        // 1..3
        std::string locus;        // defining equation of the preimage
        bool closed = false;      // preimage is exactly that vanishing locus
        std::vector<std::array<bool, 3>> cases_containing;  // zero-patterns hit
    };

    // Which points map to an ideal containing x_i? Case analysis over the
    // eight zero-patterns with symbolic nonzero coordinates; verifies the
    // preimage is the vanishing locus {l_i = 0}.
    PreimageReport preimage_closed_check(int generator_index) const;

private:
    ParamSpacePtr space_;
    PresentationPtr algebra_;
    Scalar p_;
};

}  // namespace qring
