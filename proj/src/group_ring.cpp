#include "annih/group_ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace annih {

void GroupRingElement::check_same_group(const GroupRingElement& o) const {
    if (!group_ || !o.group_ || !group_->same_group(*o.group_))
        throw std::domain_error("group ring: operands live in different group rings");
}

GroupRingElement GroupRingElement::basis(const GroupPtr& g, int element) {
    GroupRingElement e(g);
    e.set_coeff(element, 1);
    return e;
}

GroupRingElement GroupRingElement::g_trace(const GroupPtr& g) {
    GroupRingElement e(g);
    for (int i = 0; i < g->order(); ++i) e.set_coeff(i, 1);
    return e;
}

mpq_class GroupRingElement::coeff(int e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? mpq_class(0) : it->second;
}

void GroupRingElement::set_coeff(int e, const mpq_class& v) {
    if (e < 0 || e >= group_->order()) throw std::out_of_range("set_coeff: element index out of range");
    if (v == 0)
        coeffs_.erase(e);
    else
        coeffs_[e] = v;
}

bool GroupRingElement::is_integral() const {
    for (const auto& [e, c] : coeffs_)
        if (c.get_den() != 1) return false;
    return true;
}

std::vector<int> GroupRingElement::support() const {
    std::vector<int> s;
    for (const auto& [e, c] : coeffs_) s.push_back(e);
    return s;
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
    check_same_group(o);
    GroupRingElement r = *this;
    for (const auto& [e, c] : o.coeffs_) r.set_coeff(e, r.coeff(e) + c);
    return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
    check_same_group(o);
    GroupRingElement r = *this;
    for (const auto& [e, c] : o.coeffs_) r.set_coeff(e, r.coeff(e) - c);
    return r;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
    check_same_group(o);
    GroupRingElement r(group_);
    for (const auto& [a, ca] : coeffs_)
        for (const auto& [b, cb] : o.coeffs_) {
            int e = group_->mul(a, b);
            r.set_coeff(e, r.coeff(e) + ca * cb);
        }
    return r;
}

GroupRingElement GroupRingElement::scaled(const mpq_class& s) const {
    GroupRingElement r(group_);
    if (s == 0) return r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = c * s;
    return r;
}

bool GroupRingElement::operator==(const GroupRingElement& o) const {
    return group_->same_group(*o.group_) && coeffs_ == o.coeffs_;
}

std::string GroupRingElement::to_text() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first) out << " + ";
        out << c.get_str() << "*" << group_->label(e);
        first = false;
    }
    return out.str();
}

GroupRingElement GroupRingElement::parse(const GroupPtr& g, const std::string& text) {
    GroupRingElement r(g);
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("parse: empty expression");
    size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            if (s[pos] == '-') sign = -sign;
            ++pos;
        }
        std::string num;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) num += s[pos++];
        mpq_class c = 1;
        bool have_coeff = !num.empty();
        if (have_coeff) {
            c = mpq_class(num);
            c.canonicalize();
        }
        if (pos < s.size() && s[pos] == '*') {
            ++pos;
            have_coeff = true;
        }
        std::string label;
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-') label += s[pos++];
        if (label.empty()) {
            if (!have_coeff) throw std::invalid_argument("parse: malformed term");
            // bare constant means a multiple of the identity
            r.set_coeff(g->identity(), r.coeff(g->identity()) + sign * c);
            continue;
        }
        int idx = -1;
        for (int e = 0; e < g->order(); ++e)
            if (g->label(e) == label) {
                idx = e;
                break;
            }
        if (idx < 0) throw std::invalid_argument("parse: unknown element label '" + label + "'");
        r.set_coeff(idx, r.coeff(idx) + sign * c);
    }
    return r;
}

GroupRingElement theta_of(const GroupPtr& g, const std::vector<int>& admissible_set) {
    GroupRingElement t(g);
    for (int e : admissible_set) {
        if (t.coeff(e) != 0) throw std::invalid_argument("theta_of: repeated element in set");
        t.set_coeff(e, 1);
    }
    return t;
}

bool is_trace(const GroupRingElement& theta) {
    return theta == GroupRingElement::g_trace(theta.group());
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> find_witness(
    const GroupPtr& g, const std::vector<int>& s, const Subgroup& hi, const Subgroup& h) {
    auto hi_ids = hi.coset_ids();
    auto h_ids = h.coset_ids();
    const int ncosets = g->order() / hi.order();
    const int inner = hi.order() / h.order();

    std::vector<std::vector<int>> by_coset(ncosets);
    for (int e : s) by_coset[hi_ids[e]].push_back(e);
    for (const auto& blk : by_coset)
        if (static_cast<int>(blk.size()) != inner) return std::nullopt;

    const int id_coset = hi_ids[g->identity()];
    auto set_equal = [](std::vector<int> a, const std::vector<int>& b) {
        std::sort(a.begin(), a.end());
        return a == b;
    };

    for (int t0 : hi.members()) {
        // candidate inner transversal T' = t0^{-1} * (S within H_f^i)
        std::vector<int> tp;
        int inv0 = g->inverse(t0);
        bool ok = true;
        std::set<int> h_cosets_hit;
        for (int e : by_coset[id_coset]) {
            int t = g->mul(inv0, e);
            if (!hi.contains(t) || !h_cosets_hit.insert(h_ids[t]).second) {
                ok = false;
                break;
            }
            tp.push_back(t);
        }
        if (!ok) continue;
        std::sort(tp.begin(), tp.end());

        std::vector<int> reps(ncosets, -1);
        reps[id_coset] = t0;
        for (int c = 0; c < ncosets && ok; ++c) {
            if (c == id_coset) continue;
            int found = -1;
            for (int t : tp) {
                int cand = g->mul(by_coset[c][0], g->inverse(t));
                std::vector<int> prod;
                for (int t2 : tp) prod.push_back(g->mul(cand, t2));
                if (set_equal(std::move(prod), by_coset[c])) {
                    found = cand;
                    break;
                }
            }
            if (found < 0)
                ok = false;
            else
                reps[c] = found;
        }
        if (!ok) continue;
        {
            // re-check the identity coset block as a product
            std::vector<int> prod;
            for (int t2 : tp) prod.push_back(g->mul(t0, t2));
            if (!set_equal(std::move(prod), by_coset[id_coset])) continue;
        }
        std::sort(reps.begin(), reps.end());
        return std::make_pair(reps, tp);
    }
    return std::nullopt;
}

AdmissibleSystem admissible_sets(const GroupPtr& g, u64 f, u64 cap) {
    AdmissibleSystem sys;
    sys.group = g;
    sys.f = f;
    sys.subgroups = cyclic_subgroups_of_order(g, f);
    if (sys.subgroups.empty())
        throw std::domain_error("admissible_sets: f is not a residue-degree candidate (no cyclic subgroup of that order)");
    sys.intersection = intersect_subgroups(sys.subgroups);

    auto candidates = coset_rep_sets(g, sys.intersection, cap == 0 ? kDefaultEnumerationCap : cap);
    sys.transversal_count = candidates.total_count;
    sys.truncated = candidates.truncated;
    for (const auto& s : candidates.sets) {
        AdmissibleSet adm;
        adm.elements = s;
        bool ok = true;
        for (const auto& hi : sys.subgroups) {
            auto w = find_witness(g, s, hi, sys.intersection);
            if (!w) {
                ok = false;
                break;
            }
            adm.witnesses.push_back(std::move(*w));
        }
        if (ok) {
            if (sys.sets.size() >= cap) {
                sys.truncated = true;
                break;
            }
            sys.sets.push_back(std::move(adm));
        }
    }
    return sys;
}

IdealExponentVector IdealExponentVector::unit(const GroupPtr& g, const Subgroup& d) {
    IdealExponentVector v;
    v.group = g;
    v.decomposition = d;
    v.coset_of_element = d.coset_ids();
    int ncosets = g->order() / d.order();
    v.orbit_reps.assign(ncosets, g->order());
    for (int e = 0; e < g->order(); ++e)
        v.orbit_reps[v.coset_of_element[e]] = std::min(v.orbit_reps[v.coset_of_element[e]], e);
    v.exponents[v.coset_of_element[g->identity()]] = 1;
    return v;
}

IdealExponentVector act(const GroupRingElement& theta, const IdealExponentVector& v) {
    if (!theta.group()->same_group(*v.group)) throw std::domain_error("act: group mismatch");
    if (!theta.is_integral()) throw std::domain_error("act: theta must have integer coefficients");
    IdealExponentVector out = v;
    out.exponents.clear();
    const auto& g = *v.group;
    for (const auto& [sigma, n] : theta.coeffs()) {
        mpz_class nz = n.get_num();
        for (const auto& [coset, e] : v.exponents) {
            // sigma sends the prime labelled by coset tD to the one labelled (sigma t)D
            int image = v.coset_of_element[g.mul(sigma, out.orbit_reps[coset])];
            out.exponents[image] += nz * e;
        }
    }
    for (auto it = out.exponents.begin(); it != out.exponents.end();) {
        if (it->second == 0)
            it = out.exponents.erase(it);
        else
            ++it;
    }
    return out;
}

AnnihilationCertificate annihilation_certificate(const GroupPtr& g, u64 f, const std::vector<int>& s) {
    AnnihilationCertificate cert;
    cert.group = g;
    cert.f = f;
    cert.set = s;
    std::sort(cert.set.begin(), cert.set.end());

    auto subgroups = cyclic_subgroups_of_order(g, f);
    if (subgroups.empty()) throw std::domain_error("annihilation_certificate: no cyclic subgroup of order f");
    auto h = intersect_subgroups(subgroups);
    cert.multiplier = mpz_class(static_cast<unsigned long>(f / static_cast<u64>(h.order())));

    GroupRingElement theta = theta_of(g, cert.set);
    bool all_ok = is_transversal(g, h, cert.set);
    for (const auto& d : subgroups) {
        AnnihilationCheck chk;
        chk.subgroup = d;
        auto w = find_witness(g, cert.set, d, h);
        if (w) {
            chk.witness_found = true;
            chk.transversal = w->first;
            chk.inner_transversal = w->second;
            auto image = act(theta, IdealExponentVector::unit(g, d));
            int ncosets = g->order() / d.order();
            chk.action_principal = static_cast<int>(image.exponents.size()) == ncosets;
            for (const auto& [coset, e] : image.exponents)
                if (e != cert.multiplier) chk.action_principal = false;
        }
        all_ok = all_ok && chk.witness_found && chk.action_principal;
        cert.checks.push_back(std::move(chk));
    }
    cert.pass = all_ok;
    return cert;
}

GroupRingElement lift_annihilator(const GroupPtr& e, const GroupPtr& q, const std::vector<int>& quot_map,
                                  const Subgroup& h, const GroupRingElement& theta) {
    if (static_cast<int>(quot_map.size()) != e->order())
        throw std::domain_error("lift_annihilator: quotient map size mismatch");
    if (!theta.group()->same_group(*q)) throw std::domain_error("lift_annihilator: theta not over the quotient group");
    for (int a = 0; a < e->order(); ++a)
        for (int b = 0; b < e->order(); ++b)
            if (quot_map[e->mul(a, b)] != q->mul(quot_map[a], quot_map[b]))
                throw std::domain_error("lift_annihilator: map is not a homomorphism");
    std::vector<int> kernel;
    for (int a = 0; a < e->order(); ++a)
        if (quot_map[a] == q->identity()) kernel.push_back(a);
    if (!(Subgroup(e, kernel) == h))
        throw std::domain_error("lift_annihilator: quotient map inconsistent with the kernel subgroup");

    GroupRingElement out(e);
    for (const auto& [sigma, c] : theta.coeffs()) {
        if (c != 1) throw std::domain_error("lift_annihilator: theta must have 0/1 coefficients");
        int lift = -1;
        for (int a = 0; a < e->order(); ++a)
            if (quot_map[a] == sigma) {
                lift = a;
                break;
            }
        for (int tau : h.members()) {
            int el = e->mul(lift, tau);
            if (out.coeff(el) != 0) throw std::logic_error("lift_annihilator: overlapping lift support");
            out.set_coeff(el, 1);
        }
    }
    return out;
}

}  // namespace annih
