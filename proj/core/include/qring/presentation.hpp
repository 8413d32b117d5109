#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qring/commutation.hpp"
#include "qring/scalar.hpp"

namespace qring {

// Exponent vector over the ordered generators; monomial X_1^{a_1}...X_N^{a_N}
// in sorted-product (PBW) normal form.
using Monomial = std::vector<int>;
// Generator indices in product order; not necessarily sorted.
using Word = std::vector<int>;

// Graded lexicographic term order: lower total degree first, ties broken
// lexicographically with the earliest generator most significant. Straightening
// corrections are strictly below the swapped pair in this order, which is what
// makes rewriting terminate.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        long da = 0, db = 0;
        for (int x : a) da += x;
        for (int x : b) db += x;
        if (da != db) return da < db;
        return a < b;
    }
};

using TermMap = std::map<Monomial, Scalar, GrlexLess>;

struct CorrectionTerm {
    Scalar coeff;
    Monomial monomial;  // sorted by construction
};

// u.v = lead.(v.u) + sum of corrections, stored for each pair u > v.
struct StraighteningRule {
    Scalar lead;
    std::vector<CorrectionTerm> corrections;
};

enum class AlgebraKind { Generic, QuantumAffine, QuantumMatrices, Tensor };

class AlgebraPresentation;
using PresentationPtr = std::shared_ptr<const AlgebraPresentation>;

// A quantum algebra given by ordered generators and quadratic straightening
// rules; sorted monomials form a PBW basis. Immutable once constructed.
// Construction validates rule shape and runs an overlap self-check:
// associativity of normalization on generator triples, exhaustive up to
// 9 generators (the 3x3 quantum matrix case) and sampled above.
class AlgebraPresentation {
public:
    // `rules[k]` is the rule for the pair (u, v), u > v, at k = u(u-1)/2 + v.
    static PresentationPtr create(ParamSpacePtr params,
                                  std::vector<std::string> gens,
                                  std::vector<StraighteningRule> rules,
                                  std::vector<std::vector<int>> weights,
                                  AlgebraKind kind = AlgebraKind::Generic,
                                  int n = 0);

    std::size_t num_gens() const noexcept { return gens_.size(); }
    const std::vector<std::string>& gens() const noexcept { return gens_; }
    const std::string& gen_name(int g) const { return gens_.at(g); }
    std::optional<int> gen_index(const std::string& name) const;
    const ParamSpacePtr& params() const noexcept { return params_; }
    const StraighteningRule& rule(int u, int v) const;
    const std::vector<std::vector<int>>& weights() const noexcept { return weights_; }

    AlgebraKind kind() const noexcept { return kind_; }
    // For QuantumAffine: number of variables. For QuantumMatrices: matrix
    // size. For Tensor: index of the first right-copy generator.
    int n() const noexcept { return n_; }
    int tensor_split() const noexcept {
        return kind_ == AlgebraKind::Tensor ? n_ : 0;
    }

    // Fully straightens scale * word into a sum of sorted monomials.
    TermMap normalize(const Word& word, const Scalar& scale) const;

    Monomial monomial_of_word_sorted(const Word& sorted_word) const;
    Word expand(const Monomial& m) const;

    bool operator==(const AlgebraPresentation& o) const;

    // Associativity of normalization on one ordered generator triple.
    bool check_triple(int u, int v, int w) const;

private:
    AlgebraPresentation() = default;
    void validate_rules() const;
    void self_check() const;

    ParamSpacePtr params_;
    std::vector<std::string> gens_;
    std::vector<StraighteningRule> rules_;
    std::vector<std::vector<int>> weights_;
    AlgebraKind kind_ = AlgebraKind::Generic;
    int n_ = 0;
};

// Presets. Generator orders: x_1 < ... < x_n; X[i,j] lexicographic by (i,j).

// O_q(k^2) = k<x,y | xy = qyx>, generators named "x","y".
PresentationPtr preset_quantum_plane();
// Single-parameter O_q(k^n): x_i x_j = q x_j x_i for i < j.
PresentationPtr preset_quantum_affine(int n);
// Multiparameter O_q(k^n) with independent generic q_ij.
PresentationPtr preset_quantum_affine_multiparam(int n);
// O_q(k^n) over arbitrary commutation data (covers commutative and p-based).
PresentationPtr preset_quantum_affine(const CommutationSpec& c);
// O_q(M_n): n^2 generators X[i,j] with the four relation classes
// (same row, same column, antidiagonal commuting, diagonal with correction).
PresentationPtr preset_quantum_matrices(int n);

}  // namespace qring
