#include "annih/groups.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace annih {

namespace {

constexpr int kMaxTableOrder = 64;
constexpr u64 kMaxUnitModulus = 1'000'000;

}  // namespace

int FiniteGroup::mul(int a, int b) const {
    switch (kind_) {
        case Kind::Table:
            return table_[static_cast<size_t>(a) * order_ + b];
        case Kind::UnitMod:
            return index_of_residue(residues_[a] * residues_[b] % modulus_);
        case Kind::UnitModPm: {
            u64 r = residues_[a] * residues_[b] % modulus_;
            return index_of_residue(std::min(r, modulus_ - r));
        }
    }
    return 0;
}

int FiniteGroup::power(int a, u64 k) const {
    int acc = identity_, cur = a;
    while (k > 0) {
        if (k & 1) acc = mul(acc, cur);
        cur = mul(cur, cur);
        k >>= 1;
    }
    return acc;
}

u64 FiniteGroup::element_order(int a) const {
    u64 n = static_cast<u64>(order_);
    u64 k = n;
    for (auto [p, e] : factorize(n).factors) {
        (void)e;
        while (k % p == 0 && power(a, k / p) == identity_) k /= p;
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    if (kind_ != Kind::Table) return true;
    for (int a = 0; a < order_; ++a)
        for (int b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

u64 FiniteGroup::residue(int a) const {
    if (kind_ == Kind::Table) throw std::domain_error("residue: not a unit group");
    return residues_[a];
}

int FiniteGroup::index_of_residue(u64 r) const {
    if (modulus_ != 0) {
        r %= modulus_;
        if (kind_ == Kind::UnitModPm && r > modulus_ - r) r = modulus_ - r;
    }
    auto it = residue_index_.find(r);
    if (it == residue_index_.end()) throw std::domain_error("index_of_residue: residue not in group");
    return it->second;
}

bool FiniteGroup::same_group(const FiniteGroup& other) const {
    if (this == &other) return true;
    return kind_ == other.kind_ && order_ == other.order_ && modulus_ == other.modulus_ &&
           table_ == other.table_;
}

GroupPtr FiniteGroup::from_table(std::vector<int> table, std::vector<std::string> labels) {
    int n = 0;
    while (static_cast<size_t>(n) * n < table.size()) ++n;
    if (static_cast<size_t>(n) * n != table.size() || n == 0)
        throw std::invalid_argument("from_table: table size is not a positive square");
    if (n > kMaxTableOrder) throw std::invalid_argument("from_table: order above 64 not supported");

    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->kind_ = Kind::Table;
    g->order_ = n;
    g->table_ = std::move(table);
    for (int v : g->table_)
        if (v < 0 || v >= n) throw std::invalid_argument("from_table: entry out of range");

    int id = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = g->mul(e, a) == a && g->mul(a, e) == a;
        if (ok) {
            id = e;
            break;
        }
    }
    if (id < 0) throw std::invalid_argument("from_table: no two-sided identity");
    g->identity_ = id;

    g->inverses_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (g->mul(a, b) == id && g->mul(b, a) == id) {
                g->inverses_[a] = b;
                break;
            }
        }
        if (g->inverses_[a] < 0) throw std::invalid_argument("from_table: element without inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g->mul(g->mul(a, b), c) != g->mul(a, g->mul(b, c)))
                    throw std::invalid_argument("from_table: not associative");

    if (labels.empty()) {
        for (int a = 0; a < n; ++a) labels.push_back("e" + std::to_string(a));
    }
    if (static_cast<int>(labels.size()) != n) throw std::invalid_argument("from_table: label count mismatch");
    g->labels_ = std::move(labels);
    return g;
}

GroupPtr FiniteGroup::cyclic(int n) {
    if (n < 1 || n > kMaxTableOrder) throw std::invalid_argument("cyclic: order out of range");
    std::vector<int> table(static_cast<size_t>(n) * n);
    std::vector<std::string> labels;
    for (int a = 0; a < n; ++a) {
        labels.push_back("g" + std::to_string(a));
        for (int b = 0; b < n; ++b) table[static_cast<size_t>(a) * n + b] = (a + b) % n;
    }
    return from_table(std::move(table), std::move(labels));
}

GroupPtr FiniteGroup::quaternion() {
    // elements (s, x): s in {+1,-1}, x in {1, i, j, k}; index = (s<0)*4 + x
    auto pack = [](int sign, int axis) { return (sign < 0 ? 4 : 0) + axis; };
    auto mul_q = [&](int a, int b) {
        static const int prod_axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int prod_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        int sa = a >= 4 ? -1 : 1, xa = a & 3;
        int sb = b >= 4 ? -1 : 1, xb = b & 3;
        return pack(sa * sb * prod_sign[xa][xb], prod_axis[xa][xb]);
    };
    std::vector<int> table(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) table[a * 8 + b] = mul_q(a, b);
    return from_table(std::move(table), {"1", "i", "j", "k", "-1", "-i", "-j", "-k"});
}

GroupPtr FiniteGroup::unit_group_mod(u64 n, bool mod_pm1) {
    if (n < 2 || n > kMaxUnitModulus) throw std::invalid_argument("unit_group_mod: modulus out of range");
    if (mod_pm1 && n <= 2) throw std::invalid_argument("unit_group_mod: quotient needs n > 2");
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->kind_ = mod_pm1 ? Kind::UnitModPm : Kind::UnitMod;
    g->modulus_ = n;
    u64 top = mod_pm1 ? n / 2 : n - 1;
    for (u64 r = 1; r <= top; ++r) {
        if (gcd_u64(r, n) == 1) {
            g->residue_index_.emplace(r, static_cast<int>(g->residues_.size()));
            g->residues_.push_back(r);
        }
    }
    g->order_ = static_cast<int>(g->residues_.size());
    g->identity_ = 0;  // residue 1 is first
    g->inverses_.resize(g->order_);
    g->labels_.resize(g->order_);
    for (int a = 0; a < g->order_; ++a) {
        u64 inv = inv_mod(g->residues_[a], n);
        if (mod_pm1) inv = std::min(inv, n - inv);
        g->inverses_[a] = g->index_of_residue(inv);
        g->labels_[a] = "s" + std::to_string(g->residues_[a]);
    }
    return g;
}

GroupPtr FiniteGroup::from_table_text(const std::string& text) {
    std::istringstream in(text);
    int n = 0;
    if (!(in >> n) || n < 1) throw std::invalid_argument("from_table_text: bad order");
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (auto& v : table)
        if (!(in >> v)) throw std::invalid_argument("from_table_text: truncated table");
    return from_table(std::move(table));
}

Subgroup::Subgroup(GroupPtr parent, std::vector<int> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    flags_.assign(parent_->order(), 0);
    for (int e : members_) flags_[e] = 1;
    if (!contains(parent_->identity())) throw std::invalid_argument("Subgroup: identity missing");
    for (int a : members_) {
        if (!contains(parent_->inverse(a))) throw std::invalid_argument("Subgroup: not closed under inverse");
        for (int b : members_)
            if (!contains(parent_->mul(a, b))) throw std::invalid_argument("Subgroup: not closed under product");
    }
    if (parent_->order() % order() != 0) throw std::invalid_argument("Subgroup: order does not divide group order");
}

std::vector<int> Subgroup::coset_ids() const {
    const auto& g = *parent_;
    std::vector<int> ids(g.order(), -1);
    int next = 0;
    for (int e = 0; e < g.order(); ++e) {
        if (ids[e] >= 0) continue;
        for (int h : members_) ids[g.mul(e, h)] = next;
        ++next;
    }
    return ids;
}

Subgroup generated_subgroup(const GroupPtr& g, const std::vector<int>& gens) {
    std::set<int> seen(gens.begin(), gens.end());
    seen.insert(g->identity());
    std::vector<int> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int a : frontier) {
            for (int b : std::vector<int>(seen.begin(), seen.end())) {
                for (int c : {g->mul(a, b), g->mul(b, a), g->inverse(a)}) {
                    if (seen.insert(c).second) next.push_back(c);
                }
            }
        }
        frontier = std::move(next);
    }
    return Subgroup(g, std::vector<int>(seen.begin(), seen.end()));
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup(g, {g->identity()}); }

Subgroup full_subgroup(const GroupPtr& g) {
    std::vector<int> all(g->order());
    for (int i = 0; i < g->order(); ++i) all[i] = i;
    return Subgroup(g, std::move(all));
}

std::vector<Subgroup> cyclic_subgroups_of_order(const GroupPtr& g, u64 f) {
    if (f < 1) throw std::invalid_argument("cyclic_subgroups_of_order: f must be positive");
    std::set<std::vector<int>> member_sets;
    if (static_cast<u64>(g->order()) % f == 0) {
        for (int e = 0; e < g->order(); ++e) {
            if (g->element_order(e) != f) continue;
            std::vector<int> members;
            int cur = g->identity();
            for (u64 k = 0; k < f; ++k) {
                members.push_back(cur);
                cur = g->mul(cur, e);
            }
            std::sort(members.begin(), members.end());
            member_sets.insert(std::move(members));
        }
    }
    std::vector<Subgroup> out;
    for (const auto& m : member_sets) out.emplace_back(g, m);
    return out;
}

Subgroup intersect_subgroups(const std::vector<Subgroup>& list) {
    if (list.empty()) throw std::invalid_argument("intersect_subgroups: empty list");
    for (const auto& s : list)
        if (!s.parent()->same_group(*list[0].parent()))
            throw std::invalid_argument("intersect_subgroups: mixed parent groups");
    std::vector<int> common;
    for (int e : list[0].members()) {
        bool in_all = true;
        for (size_t i = 1; i < list.size() && in_all; ++i) in_all = list[i].contains(e);
        if (in_all) common.push_back(e);
    }
    return Subgroup(list[0].parent(), std::move(common));
}

CosetRepSets coset_rep_sets(const GroupPtr& g, const Subgroup& h, u64 cap) {
    if (!h.parent()->same_group(*g)) throw std::invalid_argument("coset_rep_sets: subgroup of a different group");
    auto ids = h.coset_ids();
    int ncosets = g->order() / h.order();
    std::vector<std::vector<int>> cosets(ncosets);
    for (int e = 0; e < g->order(); ++e) cosets[ids[e]].push_back(e);

    CosetRepSets out;
    mpz_class total = 1;
    for (int i = 0; i < ncosets; ++i) total *= h.order();
    out.total_count = total;

    std::vector<size_t> odometer(ncosets, 0);
    while (true) {
        if (out.sets.size() >= cap) {
            out.truncated = true;
            break;
        }
        std::vector<int> set(ncosets);
        for (int i = 0; i < ncosets; ++i) set[i] = cosets[i][odometer[i]];
        std::sort(set.begin(), set.end());
        out.sets.push_back(std::move(set));
        int pos = ncosets - 1;
        while (pos >= 0 && ++odometer[pos] == cosets[pos].size()) odometer[pos--] = 0;
        if (pos < 0) break;
    }
    return out;
}

Subgroup decomposition_subgroup(u64 p, u64 n, bool real_subfield) {
    if (gcd_u64(p % n, n) != 1) throw std::domain_error("decomposition_subgroup: ramified prime");
    auto g = FiniteGroup::unit_group_mod(n, real_subfield);
    u64 r = p % n;
    if (real_subfield) r = std::min(r, n - r);
    return generated_subgroup(g, {g->index_of_residue(r)});
}

bool is_transversal(const GroupPtr& g, const Subgroup& h, const std::vector<int>& set) {
    auto ids = h.coset_ids();
    int ncosets = g->order() / h.order();
    if (static_cast<int>(set.size()) != ncosets) return false;
    std::vector<char> hit(ncosets, 0);
    for (int e : set) {
        if (hit[ids[e]]) return false;
        hit[ids[e]] = 1;
    }
    return true;
}

std::vector<int> complement_coset_reps(const GroupPtr& g, const Subgroup& h1) {
    if (!g->is_abelian()) throw std::domain_error("complement_coset_reps: group must be abelian");
    u64 r = static_cast<u64>(h1.order());
    u64 s = static_cast<u64>(g->order()) / r;
    if (gcd_u64(r, s) != 1) throw std::domain_error("complement_coset_reps: lemma hypothesis violated");
    std::vector<int> members;
    for (int e = 0; e < g->order(); ++e)
        if (g->power(e, s) == g->identity()) members.push_back(e);
    Subgroup h2(g, members);
    if (static_cast<u64>(h2.order()) != s || !is_transversal(g, h1, h2.members()))
        throw std::logic_error("complement_coset_reps: complement is not a transversal");
    return h2.members();
}

}  // namespace annih
