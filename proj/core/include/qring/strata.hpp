#pragma once

#include <string>

#include "qring/commutation.hpp"

namespace qring {

using LatticeRow = std::vector<long long>;

// Basis of { a in Z^n : sum_i E_t[i][j] a_i = 0 for all j and all t }, the
// exponent lattice of central Laurent monomials x^a of the quantum torus on
// the given commutation data, assuming formal (generic) parameters. Computed
// by exact integer column reduction to Hermite form; the returned rows are
// the canonical row-Hermite basis of the kernel lattice.
std::vector<LatticeRow> center_lattice(const CommutationSpec& c);

// Data of the stratum indexed by a generator subset w: the localized quotient
// is a quantum torus on the complementary generators, and its center is a
// Laurent polynomial ring whose rank is the kernel rank below.
struct StratumReport {
    std::vector<int> w;          // deleted generators, 1-based, ascending
    int torus_rank = 0;          // n - |w|
    int center_rank = 0;
    std::vector<LatticeRow> center_basis;  // exponents over surviving generators
};

// One report per subset w of {1..n}, in ascending bitmask order
// (bit i-1 of the mask set iff generator i is deleted). Exactly 2^n entries.
std::vector<StratumReport> strata_report(const CommutationSpec& c);

// Structural consequence for one stratum: it looks like the prime spectrum of
// a Laurent polynomial ring in center_rank variables, and its primitive
// ideals sit over that ring's maximal ideals. Rank zero means the stratum is
// a single prime, necessarily primitive.
struct PrimitiveProfile {
    std::vector<int> w;
    int laurent_rank = 0;
    bool single_prime = false;
    std::string description;
};

PrimitiveProfile primitive_profile(const StratumReport& r);

}  // namespace qring
