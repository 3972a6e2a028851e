#include "annih/stickelberger.hpp"

#include <stdexcept>

namespace annih {

namespace {

GroupPtr cyclotomic_galois_group(u64 p) {
    if (p < 3 || !is_prime(p)) throw std::domain_error("stickelberger: p must be an odd prime");
    return FiniteGroup::unit_group_mod(p, false);
}

}  // namespace

GroupRingElement stickelberger_element(u64 p) {
    auto g = cyclotomic_galois_group(p);
    GroupRingElement theta(g);
    for (u64 a = 1; a < p; ++a) {
        int idx = g->inverse(g->index_of_residue(a));
        mpq_class c(static_cast<unsigned long>(a), static_cast<unsigned long>(p));
        c.canonicalize();
        theta.set_coeff(idx, theta.coeff(idx) + c);
    }
    return theta;
}

ZVec to_coordinates(const GroupRingElement& x) {
    if (!x.is_integral()) throw std::domain_error("to_coordinates: element not integral");
    ZVec v(x.group()->order(), 0);
    for (const auto& [e, c] : x.coeffs()) v[e] = c.get_num();
    return v;
}

GroupRingElement from_coordinates(const GroupPtr& g, const ZVec& v) {
    if (static_cast<int>(v.size()) != g->order()) throw std::invalid_argument("from_coordinates: size mismatch");
    GroupRingElement x(g);
    for (int e = 0; e < g->order(); ++e)
        if (v[e] != 0) x.set_coeff(e, mpq_class(v[e]));
    return x;
}

StickelbergerLattice generator_lattice(u64 p) {
    StickelbergerLattice l;
    l.p = p;
    l.group = cyclotomic_galois_group(p);
    GroupRingElement theta = stickelberger_element(p);

    for (u64 a = 2; a < p; ++a) {
        GroupRingElement sigma_a = GroupRingElement::basis(l.group, l.group->index_of_residue(a));
        GroupRingElement gen = theta.scaled(mpq_class(static_cast<unsigned long>(a))) - sigma_a * theta;
        if (!gen.is_integral()) throw std::logic_error("generator_lattice: theta_a not integral");
        l.basis.push_back(to_coordinates(gen));
        l.generator_names.push_back("theta_" + std::to_string(a));
    }
    GroupRingElement ptheta = theta.scaled(mpq_class(static_cast<unsigned long>(p)));
    l.basis.push_back(to_coordinates(ptheta));
    l.generator_names.push_back("p*theta");

    l.hnf = hnf(l.basis);
    return l;
}

const std::vector<std::vector<int>>& stickelberger_support_sets_23() {
    static const std::vector<std::vector<int>> sets = {
        {2, 16, 5, 20, 13, 19, 9, 17, 15, 11, 22},
        {3, 18, 7, 21, 13, 19, 9, 17, 15, 11, 22},
        {4, 10, 2, 16, 5, 20, 9, 17, 15, 11, 22},
        {2, 16, 5, 20, 13, 19, 9, 17, 15, 11, 22},  // printed identical to I_1
        {6, 3, 18, 2, 16, 13, 19, 9, 15, 11, 22},
        {10, 7, 21, 5, 20, 19, 9, 17, 15, 11, 22},
        {8, 4, 18, 2, 16, 20, 13, 9, 17, 11, 22},
        {3, 21, 16, 5, 13, 19, 9, 17, 15, 11, 22},
        {14, 10, 7, 2, 5, 20, 19, 17, 15, 11, 22},
        {18, 21, 16, 20, 13, 19, 9, 17, 15, 11, 22},
        {12, 6, 4, 3, 7, 2, 5, 13, 9, 15, 22},
    };
    return sets;
}

std::vector<GroupRingElement> paper_basis_23() {
    auto g = cyclotomic_galois_group(23);
    std::vector<GroupRingElement> out;
    for (const auto& support : stickelberger_support_sets_23()) {
        GroupRingElement f(g);
        for (int i : support) f.set_coeff(g->index_of_residue(static_cast<u64>(i)), 1);
        out.push_back(std::move(f));
    }
    out.push_back(GroupRingElement::g_trace(g));
    return out;
}

StickelbergerLattice paper_lattice_23() {
    StickelbergerLattice l;
    l.p = 23;
    l.group = cyclotomic_galois_group(23);
    auto basis = paper_basis_23();
    for (size_t j = 0; j < basis.size(); ++j) {
        l.basis.push_back(to_coordinates(basis[j]));
        l.generator_names.push_back(j + 1 < basis.size() ? "f_" + std::to_string(j + 1) : "N");
    }
    l.hnf = hnf(l.basis);
    return l;
}

LatticeMembership lattice_membership(const StickelbergerLattice& l, const GroupRingElement& x) {
    if (!x.group()->same_group(*l.group)) throw std::domain_error("lattice_membership: group mismatch");
    auto res = lattice_member(l.hnf, to_coordinates(x));
    LatticeMembership out;
    out.member = res.member;
    out.coords = std::move(res.coords);
    out.residual = std::move(res.residual);
    if (out.member) {
        // certify the witness by recombination
        if (row_combination(l.basis, out.coords) != to_coordinates(x))
            throw std::logic_error("lattice_membership: witness failed recombination check");
    }
    return out;
}

EliminationReport elimination_report(const StickelbergerLattice& l, const GroupRingElement& x) {
    const int dim = l.group->order();
    const size_t vars = l.basis.size();
    // equation per coordinate k: sum_j a_j basis[j][k] = x[k]
    ZMat coeff(dim, ZVec(vars, 0));
    ZVec rhs = to_coordinates(x);
    for (size_t j = 0; j < vars; ++j)
        for (int k = 0; k < dim; ++k) coeff[k][j] = l.basis[j][k];

    EliminationReport rep;
    std::vector<char> known(vars, 0);
    ZVec value(vars, 0);

    bool progress = true;
    while (progress) {
        progress = false;
        for (int k = 0; k < dim; ++k) {
            size_t unknown = vars;
            int count = 0;
            mpz_class rest = rhs[k];
            for (size_t j = 0; j < vars; ++j) {
                if (coeff[k][j] == 0) continue;
                if (known[j])
                    rest -= coeff[k][j] * value[j];
                else {
                    unknown = j;
                    ++count;
                }
            }
            if (count == 1 && rest % coeff[k][unknown] == 0) {
                known[unknown] = 1;
                value[unknown] = rest / coeff[k][unknown];
                rep.deductions.push_back({l.group->label(k), unknown, value[unknown]});
                progress = true;
            }
        }
    }

    // residual constants after substituting the fixed variables
    ZVec resid(dim);
    for (int k = 0; k < dim; ++k) {
        resid[k] = rhs[k];
        for (size_t j = 0; j < vars; ++j)
            if (known[j]) resid[k] -= coeff[k][j] * value[j];
    }
    for (int k1 = 0; k1 < dim; ++k1) {
        for (int k2 = k1 + 1; k2 < dim; ++k2) {
            if (resid[k1] == resid[k2]) continue;
            bool same_coeffs = true;
            for (size_t j = 0; j < vars && same_coeffs; ++j)
                if (!known[j] && coeff[k1][j] != coeff[k2][j]) same_coeffs = false;
            if (same_coeffs) {
                if (!rep.contradiction) {
                    rep.contradiction = true;
                    rep.coordinate_a = l.group->label(k1);
                    rep.coordinate_b = l.group->label(k2);
                }
                rep.pairs.emplace_back(l.group->label(k1), l.group->label(k2));
            }
        }
    }
    return rep;
}

}  // namespace annih
