#pragma once

#include <optional>
#include <string>
#include <vector>

#include "annih/group_ring.hpp"
#include "annih/matrix.hpp"

// The Stickelberger ideal of Q(zeta_p), p an odd prime, as an integer
// lattice in Z[G], G = (Z/pZ)*. Membership is decided by Hermite normal
// form; the elimination report reproduces coefficient-comparison
// refutations step by step.

namespace annih {

struct StickelbergerLattice {
    u64 p = 0;
    GroupPtr group;              // (Z/pZ)*, coordinates = residues 1..p-1 ascending
    std::vector<std::string> generator_names;
    ZMat basis;                  // rows = generators in sigma coordinates
    HnfResult hnf;
};

// theta = (1/p) sum_a a * sigma_a^{-1}
GroupRingElement stickelberger_element(u64 p);

// Lattice spanned by theta_a = (a - sigma_a) * theta for 2 <= a <= p-1
// together with p*theta (the a = p row).
StickelbergerLattice generator_lattice(u64 p);

// The eleven support sets I_1..I_11 for p = 23, exactly as printed
// (I_4 duplicates I_1; the rank computation surfaces the consequence).
const std::vector<std::vector<int>>& stickelberger_support_sets_23();

// f_1..f_11 plus the G-trace N.
std::vector<GroupRingElement> paper_basis_23();
StickelbergerLattice paper_lattice_23();

ZVec to_coordinates(const GroupRingElement& x);
GroupRingElement from_coordinates(const GroupPtr& g, const ZVec& v);

struct LatticeMembership {
    bool member = false;
    ZVec coords;
    ZVec residual;
};

LatticeMembership lattice_membership(const StickelbergerLattice& l, const GroupRingElement& x);

// Coefficient-comparison elimination over the generator rows: repeatedly fix
// variables forced by single-unknown coordinates, then look for two
// coordinates whose residual equations have equal coefficients but different
// constants. Mirrors the hand refutation of theta_11 membership.
struct EliminationStep {
    std::string coordinate;  // element label
    size_t variable;         // generator index fixed
    mpz_class value;
};

struct EliminationReport {
    std::vector<EliminationStep> deductions;
    bool contradiction = false;
    std::string coordinate_a, coordinate_b;  // the first inconsistent pair
    // every inconsistent pair (same residual coefficients, different constants)
    std::vector<std::pair<std::string, std::string>> pairs;
};

EliminationReport elimination_report(const StickelbergerLattice& l, const GroupRingElement& x);

}  // namespace annih
