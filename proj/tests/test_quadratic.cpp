#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "annih/quadratic.hpp"

using namespace annih;

TEST_CASE("field construction and discriminants") {
    CHECK(QuadraticField(-23).discriminant == -23);
    CHECK(QuadraticField(79).discriminant == 316);
    CHECK(QuadraticField(257).discriminant == 257);
    CHECK(QuadraticField(-1).discriminant == -4);
    CHECK_THROWS_AS(QuadraticField(12), std::domain_error);
    CHECK_THROWS_AS(QuadraticField(0), std::domain_error);
    CHECK_THROWS_AS(QuadraticField(1), std::domain_error);
}

TEST_CASE("splitting types") {
    QuadraticField k79(79);
    CHECK(splitting_type(k79, 2).kind == Splitting::Ramified);
    CHECK(splitting_type(k79, 3).kind == Splitting::Split);
    CHECK(splitting_type(k79, 5).kind == Splitting::Split);
    CHECK(splitting_type(k79, 7).kind == Splitting::Split);
    CHECK(splitting_type(k79, 79).kind == Splitting::Ramified);
    CHECK(splitting_type(k79, 3).residue_degree == 1);

    QuadraticField km23(-23);
    CHECK(splitting_type(km23, 2).kind == Splitting::Split);  // -23 = 1 mod 8
    CHECK(splitting_type(km23, 3).kind == Splitting::Split);
    CHECK(splitting_type(km23, 5).kind == Splitting::Inert);
    CHECK(splitting_type(km23, 5).residue_degree == 2);
    CHECK_THROWS_AS(splitting_type(km23, 6), std::domain_error);
}

TEST_CASE("imaginary class numbers") {
    CHECK(class_number(QuadraticField(-1)).wide == 1);
    CHECK(class_number(QuadraticField(-3)).wide == 1);
    CHECK(class_number(QuadraticField(-5)).wide == 2);
    CHECK(class_number(QuadraticField(-23)).wide == 3);
    CHECK(class_number(QuadraticField(-47)).wide == 5);
    CHECK(class_number(QuadraticField(-163)).wide == 1);
    CHECK(class_number(QuadraticField(-23)).narrow == 3);

    CHECK(class_number_imaginary_oracle(-23) == 3);
    CHECK(class_number_imaginary_oracle(-4) == 1);
    CHECK_THROWS_AS(class_number_imaginary_oracle(5), std::domain_error);
}

TEST_CASE("real class numbers, wide and narrow") {
    auto h79 = class_number(QuadraticField(79));
    CHECK(h79.wide == 3);
    CHECK(h79.narrow == 6);  // fundamental unit has norm +1
    CHECK(!h79.norm_minus_one_unit);

    auto h257 = class_number(QuadraticField(257));
    CHECK(h257.wide == 3);
    CHECK(h257.norm_minus_one_unit);  // 16^2 - 257 = -1
    CHECK(h257.narrow == 3);

    CHECK(class_number(QuadraticField(1229)).wide == 3);
    CHECK(class_number(QuadraticField(2)).wide == 1);
    CHECK(class_number(QuadraticField(5)).wide == 1);
    CHECK(class_number(QuadraticField(10)).wide == 2);
}

TEST_CASE("continued fraction cycles") {
    auto fc7 = form_cycle(7);  // sqrt 7 = [2; 1,1,1,4]
    CHECK(fc7.a0 == 2);
    CHECK(fc7.period == 4);
    auto [x7, y7] = fc7.unit();
    CHECK(x7 == 8);
    CHECK(y7 == 3);
    CHECK(!fc7.negative_unit());

    auto fc2 = form_cycle(2);
    CHECK(fc2.period == 1);
    auto neg = fc2.negative_unit();
    REQUIRE(neg);
    CHECK(neg->first == 1);
    CHECK(neg->second == 1);
    auto [x2, y2] = fc2.unit();
    CHECK(x2 * x2 - 2 * y2 * y2 == 1);

    auto fc257 = form_cycle(257);
    CHECK(fc257.period == 1);
    CHECK(fc257.negative_unit());

    // signed values are the norms of the convergents
    auto fc79 = form_cycle(79);
    for (size_t i = 0; i < fc79.period; ++i) {
        mpz_class v = fc79.conv_p[i] * fc79.conv_p[i] - 79 * fc79.conv_q[i] * fc79.conv_q[i];
        CHECK(v == fc79.signed_values[i]);
    }
    CHECK_THROWS_AS(form_cycle(9), std::domain_error);
}

TEST_CASE("norm equation decisions") {
    // the cycle values of sqrt 10 are only +-1, yet 6 = 4^2 - 10 is represented
    auto s = norm_equation(10, 6);
    CHECK(s.solvable);
    CHECK(s.x * s.x - 10 * s.y * s.y == 6);

    CHECK(!norm_equation(257, 2).solvable);
    CHECK(!norm_equation(257, -2).solvable);
    CHECK(norm_equation(257, -1).solvable);
    CHECK(!norm_equation(79, 3).solvable);
    CHECK(!norm_equation(79, -3).solvable);
    CHECK(norm_equation(79, 2).solvable);
    CHECK(norm_equation(79, -63).solvable);  // 4 + sqrt 79
    CHECK(norm_equation(79, 9).solvable);    // trivial square
}

TEST_CASE("principal form representation") {
    QuadraticField k79(79);
    auto r2 = represents_principal(k79, 2);
    CHECK(r2.represented);
    CHECK(r2.x == 9);
    CHECK(r2.y == 1);
    CHECK(!represents_principal(k79, 3).represented);
    CHECK(!r2.cycle_values.empty());

    // outside the exactness range
    CHECK_THROWS_AS(represents_principal(k79, 100), std::domain_error);
    CHECK_THROWS_AS(represents_principal(QuadraticField(-23), 2), std::domain_error);

    // d = 1 mod 4 normalizes to 4m
    QuadraticField k257(257);
    auto r2b = represents_principal(k257, 2);
    CHECK(!r2b.represented);  // x^2 - 257 y^2 = 8 insoluble
}

TEST_CASE("pell family certificates") {
    auto c1 = pell_family_insoluble(PellKind::P4, 16, 2);  // x^2 - 257 y^2 = +-2
    CHECK(c1.radicand == 257);
    CHECK(c1.insoluble);
    CHECK(c1.cycle_period == 1);

    auto c2 = pell_family_insoluble(PellKind::P5, 35, 7);  // x^2 - 1229 y^2 = +-28
    CHECK(c2.radicand == 1229);
    CHECK(c2.target == 28);
    CHECK(c2.insoluble);

    CHECK_THROWS_AS(pell_family_insoluble(PellKind::P4, 16, 4), std::domain_error);   // square m
    CHECK_THROWS_AS(pell_family_insoluble(PellKind::P4, 16, 33), std::domain_error);  // m >= 2n
    CHECK_THROWS_AS(pell_family_insoluble(PellKind::P5, 1, 2), std::domain_error);    // n < 2
    CHECK_THROWS_AS(pell_family_insoluble(PellKind::P5, 10, 11), std::domain_error);  // m >= n
}

TEST_CASE("imaginary norm search") {
    CHECK(!imaginary_norm_search(23, 12).solvable);
    CHECK(!imaginary_norm_search(23, 2).solvable);
    CHECK(!imaginary_norm_search(23, 8).solvable);
    auto s = imaginary_norm_search(23, 27);
    CHECK(s.solvable);
    CHECK(s.x * s.x + 23 * s.y * s.y == 27);
    CHECK(imaginary_norm_search(23, 23).solvable);  // (0, 1)
}

TEST_CASE("norms and Minkowski bounds") {
    QuadraticField k79(79);
    CHECK(element_norm(k79, 4, 1) == -63);
    CHECK(element_norm(k79, 3, 1) == -70);
    CHECK(element_norm(k79, 9, 1) == 2);

    auto b79 = minkowski_bound(k79);
    CHECK(b79.floor == 8);  // sqrt(316)/2 = 8.88..
    CHECK(b79.radicand == 316);

    auto bm23 = minkowski_bound(QuadraticField(-23));
    CHECK(bm23.floor == 3);  // 2 sqrt(23) / pi = 3.05..
    CHECK(minkowski_bound(QuadraticField(-1)).floor == 1);
    CHECK(minkowski_bound(QuadraticField(5)).floor == 1);
}
