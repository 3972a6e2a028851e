#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "annih/group_ring.hpp"

using namespace annih;

TEST_CASE("parse and canonical text") {
    auto g = FiniteGroup::unit_group_mod(23, false);
    auto x = GroupRingElement::parse(g, "1*s1 + 1*s5");
    CHECK(x.to_text() == "1*s1 + 1*s5");
    CHECK(GroupRingElement::parse(g, "s1+s5") == x);
    CHECK(GroupRingElement::parse(g, " s5 + s1 ") == x);
    auto y = GroupRingElement::parse(g, "1/23*s2 - s3");
    CHECK(!y.is_integral());
    CHECK(y.coeff(g->index_of_residue(3)) == -1);
    CHECK_THROWS(GroupRingElement::parse(g, "s99"));
}

TEST_CASE("ring arithmetic") {
    auto g = FiniteGroup::cyclic(6);
    auto a = GroupRingElement::basis(g, 1);
    auto b = GroupRingElement::basis(g, 2);
    CHECK(a * b == GroupRingElement::basis(g, 3));
    CHECK((a + b) - b == a);
    auto n = GroupRingElement::g_trace(g);
    CHECK(a * n == n);  // sigma * N = N
    CHECK(is_trace(n));
    CHECK(!is_trace(a));
    CHECK(n.scaled(mpq_class(1, 2)).is_integral() == false);
}

TEST_CASE("theta_of rejects repeats") {
    auto g = FiniteGroup::cyclic(6);
    CHECK_THROWS_AS(theta_of(g, {1, 1, 2}), std::invalid_argument);
    auto t = theta_of(g, {0, 3});
    CHECK(t.coeff(0) == 1);
    CHECK(t.coeff(3) == 1);
}

TEST_CASE("quaternion admissible system at f = 4") {
    auto q8 = FiniteGroup::quaternion();
    auto sys = admissible_sets(q8, 4);
    CHECK(sys.subgroups.size() == 3);
    CHECK(sys.intersection.members() == std::vector<int>{0, 4});
    CHECK(!sys.sets.empty());

    bool has_ijk = false;
    for (const auto& s : sys.sets) {
        if (s.elements == std::vector<int>{0, 1, 2, 3}) has_ijk = true;  // {1, i, j, k}
        REQUIRE(s.witnesses.size() == 3);
        // witnesses multiply back to S
        for (size_t i = 0; i < 3; ++i) {
            std::vector<int> prod;
            for (int t : s.witnesses[i].first)
                for (int tp : s.witnesses[i].second) prod.push_back(q8->mul(t, tp));
            std::sort(prod.begin(), prod.end());
            CHECK(prod == s.elements);
        }
    }
    CHECK(has_ijk);
}

TEST_CASE("annihilation certificates for cyclic groups") {
    auto g = FiniteGroup::cyclic(12);
    for (u64 f : {1, 2, 3, 4, 6, 12}) {
        auto sys = admissible_sets(g, f);
        CHECK(!sys.sets.empty());
        for (const auto& s : sys.sets) {
            auto cert = annihilation_certificate(g, f, s.elements);
            CHECK(cert.pass);
            CHECK(cert.multiplier == 1);  // unique subgroup: |H| = f
        }
    }
}

TEST_CASE("perturbed sets fail certification") {
    auto g = FiniteGroup::cyclic(12);
    // two elements in the same coset of the order-4 subgroup {0,3,6,9}
    auto cert = annihilation_certificate(g, 4, {0, 1, 4});
    CHECK(!cert.pass);

    auto q8 = FiniteGroup::quaternion();
    auto bad = annihilation_certificate(q8, 4, {0, 4, 1, 2});  // {1, -1, i, j}
    CHECK(!bad.pass);
}

TEST_CASE("action on ideal exponent vectors") {
    auto g = FiniteGroup::unit_group_mod(23, false);
    auto d = decomposition_subgroup(2, 23, false);  // order 11, two cosets
    auto unit = IdealExponentVector::unit(g, d);
    CHECK(unit.orbit_reps.size() == 2);

    // theta_11 = s1 + s5 sends the unit vector to the all-ones vector
    auto theta = GroupRingElement::parse(g, "s1 + s5");
    auto image = act(theta, unit);
    CHECK(image.exponents.size() == 2);
    for (const auto& [coset, e] : image.exponents) CHECK(e == 1);

    // the trace hits each coset |D| times
    auto n_img = act(GroupRingElement::g_trace(g), unit);
    for (const auto& [coset, e] : n_img.exponents) CHECK(e == 11);
}

TEST_CASE("lifting an annihilator through a quotient") {
    auto e = FiniteGroup::cyclic(6);
    auto q = FiniteGroup::cyclic(3);
    std::vector<int> quot_map;
    for (int a = 0; a < 6; ++a) quot_map.push_back(a % 3);
    auto h = generated_subgroup(e, {3});  // kernel {0, 3}

    auto theta = theta_of(q, {0, 1});
    auto lifted = lift_annihilator(e, q, quot_map, h, theta);
    // each support point lifts times all of the kernel: 4 terms
    CHECK(lifted.support().size() == 4);
    for (int el : lifted.support()) CHECK(lifted.coeff(el) == 1);

    std::vector<int> wrong_map(6, 0);
    CHECK_THROWS_AS(lift_annihilator(e, q, wrong_map, h, theta), std::domain_error);
}
