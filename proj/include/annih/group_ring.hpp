#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "annih/groups.hpp"

// The group ring Z[G] (rational scalars where the Stickelberger element
// needs them), the admissible-set system, the annihilators theta_f(S), and
// their symbolic action on ideal exponent vectors.

namespace annih {

class GroupRingElement {
public:
    GroupRingElement() = default;
    explicit GroupRingElement(GroupPtr group) : group_(std::move(group)) {}

    static GroupRingElement basis(const GroupPtr& g, int element);
    static GroupRingElement g_trace(const GroupPtr& g);
    // Parses the canonical text form, e.g. "1*s1 + 1*s5" or "s1+s5".
    static GroupRingElement parse(const GroupPtr& g, const std::string& text);

    const GroupPtr& group() const { return group_; }
    const std::map<int, mpq_class>& coeffs() const { return coeffs_; }
    mpq_class coeff(int e) const;
    void set_coeff(int e, const mpq_class& v);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_integral() const;
    std::vector<int> support() const;

    GroupRingElement operator+(const GroupRingElement& o) const;
    GroupRingElement operator-(const GroupRingElement& o) const;
    GroupRingElement operator*(const GroupRingElement& o) const;
    GroupRingElement scaled(const mpq_class& s) const;
    bool operator==(const GroupRingElement& o) const;

    // "c1*s_a + c2*s_b + ..." with ascending element labels
    std::string to_text() const;

private:
    void check_same_group(const GroupRingElement& o) const;

    GroupPtr group_;
    std::map<int, mpq_class> coeffs_;  // absent key = 0; values never 0
};

GroupRingElement theta_of(const GroupPtr& g, const std::vector<int>& admissible_set);
bool is_trace(const GroupRingElement& theta);

struct AdmissibleSet {
    std::vector<int> elements;  // sorted
    // per cyclic subgroup H_f^i: (T_i transversal of H_f^i in G,
    //                             T_i' transversal of H in H_f^i), T_i * T_i' = S
    std::vector<std::pair<std::vector<int>, std::vector<int>>> witnesses;
};

struct AdmissibleSystem {
    GroupPtr group;
    u64 f = 0;
    std::vector<Subgroup> subgroups;  // H_f^1 .. H_f^r
    Subgroup intersection;            // H
    std::vector<AdmissibleSet> sets;
    mpz_class transversal_count;  // candidates |H|^[G:H]
    bool truncated = false;
};

inline constexpr u64 kDefaultEnumerationCap = 10'000;

AdmissibleSystem admissible_sets(const GroupPtr& g, u64 f, u64 cap = kDefaultEnumerationCap);

// Searches the witness pair (T, T') with T * T' = S, T a transversal of hi
// in G and T' a transversal of h in hi. Deterministic first match.
std::optional<std::pair<std::vector<int>, std::vector<int>>> find_witness(
    const GroupPtr& g, const std::vector<int>& s, const Subgroup& hi, const Subgroup& h);

// Formal ideal exponent vector over the orbit of primes above one rational
// prime: orbit labels are the left cosets of the decomposition subgroup.
struct IdealExponentVector {
    GroupPtr group;
    Subgroup decomposition;
    std::vector<int> coset_of_element;       // element -> coset id
    std::vector<int> orbit_reps;             // coset id -> minimal element
    std::map<int, mpz_class> exponents;      // coset id -> exponent

    static IdealExponentVector unit(const GroupPtr& g, const Subgroup& d);
};

IdealExponentVector act(const GroupRingElement& theta, const IdealExponentVector& v);

struct AnnihilationCheck {
    Subgroup subgroup;  // the cyclic order-f subgroup playing decomposition group
    bool witness_found = false;
    std::vector<int> transversal;       // T
    std::vector<int> inner_transversal; // T'
    bool action_principal = false;      // act(theta, unit) == multiplier * all-ones
};

struct AnnihilationCertificate {
    GroupPtr group;
    u64 f = 0;
    std::vector<int> set;
    mpz_class multiplier;  // f / |H|
    std::vector<AnnihilationCheck> checks;
    bool pass = false;
};

AnnihilationCertificate annihilation_certificate(const GroupPtr& g, u64 f, const std::vector<int>& s);

// theta over a quotient group q lifted through the covering group e:
// quot_map sends each element of e to its image index in q; kernel must be
// exactly h. Result is sum over lifts-of-support times all of h.
GroupRingElement lift_annihilator(const GroupPtr& e, const GroupPtr& q, const std::vector<int>& quot_map,
                                  const Subgroup& h, const GroupRingElement& theta);

}  // namespace annih
