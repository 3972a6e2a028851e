#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "annih/matrix.hpp"

using namespace annih;

namespace {

ZMat random_matrix(std::mt19937& rng, int rows, int cols, int span) {
    std::uniform_int_distribution<int> d(-span, span);
    ZMat m(rows, ZVec(cols));
    for (auto& r : m)
        for (auto& v : r) v = d(rng);
    return m;
}

ZMat multiply(const ZMat& a, const ZMat& b) {
    ZMat c(a.size(), ZVec(b[0].size(), 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k)
            for (size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

}  // namespace

TEST_CASE("hnf transform certifies the reduction") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = 2 + trial % 5, cols = 2 + (trial / 2) % 5;
        ZMat m = random_matrix(rng, rows, cols, 9);
        auto res = hnf(m);

        // U * m reproduces h padded with zero rows
        ZMat um = multiply(res.transform, m);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                CHECK(um[i][j] == (i < res.rank ? res.h[i][j] : mpz_class(0)));

        // U unimodular
        CHECK(abs(bareiss_determinant(res.transform)) == 1);

        // pivot structure: positive pivots, zeros below, reduced above
        for (int i = 0; i < res.rank; ++i) {
            int pc = res.pivot_cols[i];
            CHECK(res.h[i][pc] > 0);
            for (int k = 0; k < i; ++k) {
                CHECK(res.h[k][pc] >= 0);
                CHECK(res.h[k][pc] < res.h[i][pc]);
            }
        }
    }
}

TEST_CASE("bareiss determinant matches known values") {
    ZMat m1 = {{1, 3}, {2, 1}};
    CHECK(bareiss_determinant(m1) == -5);
    ZMat m2 = {{2, 0, 0}, {0, 3, 0}, {0, 0, 5}};
    CHECK(bareiss_determinant(m2) == 30);
    ZMat m3 = {{1, 2}, {2, 4}};
    CHECK(bareiss_determinant(m3) == 0);

    // row swap flips the sign
    ZMat m4 = {{0, 1}, {1, 0}};
    CHECK(bareiss_determinant(m4) == -1);
}

TEST_CASE("lattice membership with witness recombination") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = 2 + trial % 4, cols = rows + trial % 3;
        ZMat m = random_matrix(rng, rows, cols, 6);
        auto lat = hnf(m);

        // combinations of the rows are members and coords recombine
        std::uniform_int_distribution<int> d(-4, 4);
        ZVec coeffs(rows);
        for (auto& c : coeffs) c = d(rng);
        ZVec x = row_combination(m, coeffs);
        auto res = lattice_member(lat, x);
        CHECK(res.member);
        CHECK(row_combination(m, res.coords) == x);
    }

    // a vector outside an index-2 sublattice
    ZMat even = {{2, 0}, {0, 2}};
    auto lat = hnf(even);
    auto miss = lattice_member(lat, {1, 0});
    CHECK(!miss.member);
    bool nonzero = false;
    for (const auto& v : miss.residual) nonzero = nonzero || v != 0;
    CHECK(nonzero);
    CHECK(lattice_member(lat, {4, -2}).member);
}
