#pragma once

#include <cstdint>
#include <utility>
#include <vector>

// Exact elementary number theory on 64-bit integers. Everything here is
// deterministic: primality is Miller-Rabin with a witness set that is a
// proven test for the whole 64-bit range, factoring is trial division plus
// Brent's rho with a documented scale cap.

namespace annih {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Largest value accepted by factorize(); all inputs in this artifact are
// far below it.
inline constexpr u64 kFactorizationCap = 1'000'000'000'000ull;

u64 gcd_u64(u64 a, u64 b);
u64 isqrt_u64(u64 n);
bool is_square_u64(u64 n);

u64 mul_mod(u64 a, u64 b, u64 m);

// base^exp mod modulus, base may be negative. modulus = 0 is a domain error.
u64 mod_pow(i64 base, u64 exp, u64 modulus);

// Deterministic for all n < 3.3 * 10^24, in particular the full u64 range.
bool is_prime(u64 n);

struct Factorization {
    u64 value = 1;
    std::vector<std::pair<u64, unsigned>> factors;  // primes ascending

    u64 reassemble() const;
};

Factorization factorize(u64 n);
bool is_squarefree(u64 n);
u64 euler_phi(u64 n);

// Modular inverse of a mod n, gcd(a, n) must be 1.
u64 inv_mod(u64 a, u64 n);

// Multiplicative order of a mod n. Computed by factoring phi(n) and
// descending through its prime divisors, never by brute iteration.
u64 mult_order(u64 a, u64 n);

// Kronecker symbol (a|n) for n >= 1, via the reciprocity recursion.
// Agrees with the Legendre symbol when n is an odd prime.
int kronecker_symbol(i64 a, i64 n);

}  // namespace annih
