#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "annih/stickelberger.hpp"

using namespace annih;

TEST_CASE("stickelberger element for small primes") {
    // p = 3: theta = (1/3)(sigma_1 + 2 sigma_2)
    auto t3 = stickelberger_element(3);
    auto g3 = t3.group();
    CHECK(t3.coeff(g3->index_of_residue(1)) == mpq_class(1, 3));
    CHECK(t3.coeff(g3->index_of_residue(2)) == mpq_class(2, 3));

    // (a - sigma_a) theta is integral for every a
    auto t23 = stickelberger_element(23);
    auto g = t23.group();
    for (u64 a = 2; a < 23; ++a) {
        auto gen = t23.scaled(mpq_class(static_cast<unsigned long>(a))) -
                   GroupRingElement::basis(g, g->index_of_residue(a)) * t23;
        CHECK(gen.is_integral());
    }
    CHECK_THROWS(stickelberger_element(4));
    CHECK_THROWS(stickelberger_element(2));
}

TEST_CASE("printed support sets: shape and the duplicate row") {
    const auto& sets = stickelberger_support_sets_23();
    REQUIRE(sets.size() == 11);
    for (const auto& s : sets) CHECK(s.size() == 11);
    CHECK(sets[3] == sets[0]);  // I_4 is printed identical to I_1

    auto paper = paper_lattice_23();
    CHECK(paper.basis.size() == 12);
    CHECK(paper.hnf.rank == 11);  // consequence of the duplicate

    auto gen = generator_lattice(23);
    CHECK(gen.basis.size() == 22);
}

TEST_CASE("printed basis lies in the generator lattice") {
    auto gen = generator_lattice(23);
    for (const auto& b : paper_basis_23()) {
        auto res = lattice_membership(gen, b);
        CHECK(res.member);
    }
}

TEST_CASE("theta_11 = s1 + s5 is outside the ideal") {
    auto gen = generator_lattice(23);
    auto paper = paper_lattice_23();
    auto x = GroupRingElement::parse(gen.group, "1*s1 + 1*s5");

    CHECK(!lattice_membership(gen, x).member);
    CHECK(!lattice_membership(paper, x).member);

    // the trace itself is a member
    auto n = GroupRingElement::g_trace(gen.group);
    CHECK(lattice_membership(gen, n).member);
    CHECK(lattice_membership(paper, n).member);
}

TEST_CASE("elimination report reproduces the coefficient refutation") {
    auto paper = paper_lattice_23();
    auto x = GroupRingElement::parse(paper.group, "s1 + s5");
    auto rep = elimination_report(paper, x);

    // comparing sigma_1 coefficients forces a_12 = 1; sigma_12 forces a_11 = -1
    bool a12 = false, a11 = false;
    for (const auto& d : rep.deductions) {
        if (d.variable == 11) {
            CHECK(d.value == 1);
            CHECK(d.coordinate == "s1");
            a12 = true;
        }
        if (d.variable == 10) {
            CHECK(d.value == -1);
            CHECK(d.coordinate == "s12");
            a11 = true;
        }
    }
    CHECK(a12);
    CHECK(a11);

    CHECK(rep.contradiction);
    bool paper_pair = false;
    for (const auto& [c1, c2] : rep.pairs)
        if (std::set<std::string>{c1, c2} == std::set<std::string>{"s11", "s22"}) paper_pair = true;
    CHECK(paper_pair);

    // a genuine member draws no contradiction
    auto member = paper_basis_23()[0];
    auto ok = elimination_report(paper, member);
    CHECK(!ok.contradiction);
}

TEST_CASE("membership witnesses recombine") {
    auto gen = generator_lattice(23);
    auto f1 = paper_basis_23()[0];
    auto res = lattice_membership(gen, f1);
    REQUIRE(res.member);
    CHECK(row_combination(gen.basis, res.coords) == to_coordinates(f1));
}
