#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

// Exact integer matrices and row-style Hermite normal form, sized for the
// lattices in this project (a few dozen rows). No modular shortcuts: the
// transform matrix certifies every reduction.

namespace annih {

using ZMat = std::vector<std::vector<mpz_class>>;
using ZVec = std::vector<mpz_class>;

struct HnfResult {
    ZMat h;          // nonzero rows of the HNF, pivots positive, entries above pivots reduced
    ZMat transform;  // unimodular U with U * input = (h padded with zero rows)
    std::vector<int> pivot_cols;
    int rank = 0;
};

HnfResult hnf(const ZMat& m);

mpz_class bareiss_determinant(ZMat m);

struct MembershipResult {
    bool member = false;
    ZVec coords;    // coordinates over the original generator rows, when member
    ZVec residual;  // nonzero reduction residue, when not a member
};

// Decides x in the Z-row-span of generators.
MembershipResult lattice_member(const HnfResult& lattice, const ZVec& x);

ZVec row_combination(const ZMat& rows, const ZVec& coeffs);

}  // namespace annih
