#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "annih/arith.hpp"

// Finite groups: general groups by multiplication table (small), and the
// unit groups (Z/nZ)* together with their quotient by {+-1} for the real
// cyclotomic subfields. Elements are dense indices 0..order-1.

namespace annih {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

class FiniteGroup {
public:
    enum class Kind { Table, UnitMod, UnitModPm };

    // Table groups are validated exhaustively (identity, inverses,
    // associativity); capped at order 64.
    static GroupPtr from_table(std::vector<int> table, std::vector<std::string> labels = {});
    static GroupPtr cyclic(int n);
    static GroupPtr quaternion();  // {+-1, +-i, +-j, +-k}
    static GroupPtr unit_group_mod(u64 n, bool mod_pm1);

    // plain-text format: first line order, then order^2 indices
    static GroupPtr from_table_text(const std::string& text);

    int order() const { return order_; }
    Kind kind() const { return kind_; }
    bool is_unit_group() const { return kind_ != Kind::Table; }
    u64 modulus() const { return modulus_; }
    bool mod_pm1() const { return kind_ == Kind::UnitModPm; }

    int mul(int a, int b) const;
    int identity() const { return identity_; }
    int inverse(int a) const { return inverses_[a]; }
    int power(int a, u64 k) const;
    u64 element_order(int a) const;
    bool is_abelian() const;

    const std::string& label(int a) const { return labels_[a]; }
    u64 residue(int a) const;            // unit groups only
    int index_of_residue(u64 r) const;   // unit groups only, r coprime to n

    bool same_group(const FiniteGroup& other) const;

private:
    FiniteGroup() = default;

    Kind kind_ = Kind::Table;
    int order_ = 0;
    int identity_ = 0;
    u64 modulus_ = 0;
    std::vector<int> table_;       // Table kind
    std::vector<u64> residues_;    // unit groups, ascending
    std::unordered_map<u64, int> residue_index_;
    std::vector<int> inverses_;
    std::vector<std::string> labels_;
};

class Subgroup {
public:
    Subgroup() = default;
    Subgroup(GroupPtr parent, std::vector<int> members);

    const GroupPtr& parent() const { return parent_; }
    const std::vector<int>& members() const { return members_; }  // sorted
    int order() const { return static_cast<int>(members_.size()); }
    bool contains(int e) const { return flags_[e] != 0; }
    bool operator==(const Subgroup& other) const { return members_ == other.members_; }

    // left coset id of g, cosets numbered by ascending minimal element
    std::vector<int> coset_ids() const;

private:
    GroupPtr parent_;
    std::vector<int> members_;
    std::vector<char> flags_;
};

Subgroup generated_subgroup(const GroupPtr& g, const std::vector<int>& gens);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);

// All cyclic subgroups of order exactly f, deterministic order (sorted by
// member lists).
std::vector<Subgroup> cyclic_subgroups_of_order(const GroupPtr& g, u64 f);

Subgroup intersect_subgroups(const std::vector<Subgroup>& list);

struct CosetRepSets {
    std::vector<std::vector<int>> sets;  // each sorted; lexicographic order
    mpz_class total_count;               // |H|^[G:H]
    bool truncated = false;
};

CosetRepSets coset_rep_sets(const GroupPtr& g, const Subgroup& h, u64 cap);

// Cyclic subgroup generated by the residue p in (Z/nZ)* (or its quotient
// by +-1). Its order is the residue degree of p.
Subgroup decomposition_subgroup(u64 p, u64 n, bool real_subfield);

// Lemma: in an abelian G with |H1| = r coprime to s = |G|/r, the subgroup
// of order s is a transversal of H1.
std::vector<int> complement_coset_reps(const GroupPtr& g, const Subgroup& h1);

bool is_transversal(const GroupPtr& g, const Subgroup& h, const std::vector<int>& set);

}  // namespace annih
