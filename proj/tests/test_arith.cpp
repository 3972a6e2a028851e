#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "annih/arith.hpp"

using namespace annih;

TEST_CASE("isqrt and squares") {
    for (u64 n = 0; n < 2000; ++n) {
        u64 r = isqrt_u64(n);
        CHECK(r * r <= n);
        CHECK((r + 1) * (r + 1) > n);
        CHECK(is_square_u64(n) == (r * r == n));
    }
    CHECK(isqrt_u64(0xffffffffffffffffull) == 0xffffffffull);
}

TEST_CASE("primality against a sieve") {
    const int bound = 10000;
    std::vector<char> sieve(bound, 1);
    sieve[0] = sieve[1] = 0;
    for (int i = 2; i * i < bound; ++i)
        if (sieve[i])
            for (int j = i * i; j < bound; j += i) sieve[j] = 0;
    for (int n = 0; n < bound; ++n) CHECK(is_prime(static_cast<u64>(n)) == static_cast<bool>(sieve[n]));
    CHECK(is_prime(1'000'000'007ull));
    CHECK(is_prime(18446744073709551557ull));  // largest u64 prime
    CHECK(!is_prime(18446744073709551555ull));
}

TEST_CASE("factorization reassembles and is sorted") {
    for (u64 n = 2; n < 3000; ++n) {
        auto f = factorize(n);
        CHECK(f.reassemble() == n);
        for (size_t i = 0; i < f.factors.size(); ++i) {
            CHECK(is_prime(f.factors[i].first));
            if (i) CHECK(f.factors[i - 1].first < f.factors[i].first);
        }
    }
    auto big = factorize(1229u * 7229u);
    CHECK(big.factors.size() == 2);
    CHECK(big.factors[0].first == 1229);
    CHECK_THROWS_AS(factorize(0), std::domain_error);
    CHECK_THROWS_AS(factorize(kFactorizationCap + 1), std::domain_error);
}

TEST_CASE("euler phi and squarefree") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(23) == 22);
    CHECK(euler_phi(8101) == 8100);
    CHECK(euler_phi(1093) == 1092);
    CHECK(is_squarefree(1229));
    CHECK(!is_squarefree(12));
    CHECK(!is_squarefree(49));
    // phi multiplicative on coprime pairs
    for (u64 a = 1; a < 60; ++a)
        for (u64 b = 1; b < 60; ++b)
            if (gcd_u64(a, b) == 1) CHECK(euler_phi(a * b) == euler_phi(a) * euler_phi(b));
}

TEST_CASE("modular arithmetic") {
    CHECK(mod_pow(3, 7, 1093) == 1);  // 3^7 = 2187 = 2*1093 + 1
    CHECK(mod_pow(3, 7, 2187) == 0);
    CHECK(mod_pow(-2, 3, 23) == 15);  // (-8) mod 23
    CHECK_THROWS_AS(mod_pow(2, 3, 0), std::domain_error);
    for (u64 n : {5ull, 23ull, 97ull, 1093ull})
        for (u64 a = 1; a < n && a < 80; ++a) {
            if (gcd_u64(a, n) != 1) continue;
            CHECK(mul_mod(a, inv_mod(a, n), n) == 1);
        }
}

TEST_CASE("multiplicative order") {
    CHECK(mult_order(3, 1093) == 7);  // 3^7 = 2187 = 2*1093 + 1
    CHECK(mult_order(2, 23) == 11);
    CHECK(mult_order(3, 23) == 11);
    CHECK(mult_order(5, 23) == 22);  // 5 generates
    for (u64 a = 2; a < 23; ++a) {
        u64 k = mult_order(a, 23);
        CHECK(mod_pow(static_cast<i64>(a), k, 23) == 1);
        CHECK(22 % k == 0);
        for (u64 d = 1; d < k; ++d)
            if (k % d == 0) CHECK(mod_pow(static_cast<i64>(a), d, 23) != 1);
    }
}

TEST_CASE("kronecker symbol") {
    // Legendre values mod 23: squares are {1,2,3,4,6,8,9,12,13,16,18}
    std::vector<int> squares;
    for (int x = 1; x < 23; ++x) squares.push_back(x * x % 23);
    for (int a = 1; a < 23; ++a) {
        bool sq = std::find(squares.begin(), squares.end(), a) != squares.end();
        CHECK(kronecker_symbol(a, 23) == (sq ? 1 : -1));
    }
    CHECK(kronecker_symbol(23, 23) == 0);
    CHECK(kronecker_symbol(-23, 2) == 1);   // -23 = 1 mod 8
    CHECK(kronecker_symbol(257, 2) == 1);   // 257 = 1 mod 8
    CHECK(kronecker_symbol(5, 2) == -1);    // 5 mod 8
    CHECK(kronecker_symbol(-1, 3) == -1);
    // multiplicativity in the top argument
    for (i64 a = -20; a <= 20; ++a)
        for (i64 b = -20; b <= 20; ++b) CHECK(kronecker_symbol(a * b, 23) == kronecker_symbol(a, 23) * kronecker_symbol(b, 23));
}
