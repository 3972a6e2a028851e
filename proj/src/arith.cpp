#include "annih/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace annih {

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

u64 isqrt_u64(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_square_u64(u64 n) {
    u64 r = isqrt_u64(n);
    return r * r == n;
}

u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 mod_pow(i64 base, u64 exp, u64 modulus) {
    if (modulus == 0) throw std::domain_error("mod_pow: modulus must be positive");
    if (modulus == 1) return 0;
    i64 m = static_cast<i64>(modulus);
    i64 b = base % m;
    if (b < 0) b += m;
    u64 acc = 1, cur = static_cast<u64>(b);
    while (exp > 0) {
        if (exp & 1) acc = mul_mod(acc, cur, modulus);
        cur = mul_mod(cur, cur, modulus);
        exp >>= 1;
    }
    return acc;
}

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
    u64 x = mod_pow(static_cast<i64>(a % n), d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;  // a witnesses compositeness
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is a proven deterministic test for n < 3.3 * 10^24.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

u64 Factorization::reassemble() const {
    u64 n = 1;
    for (auto [p, e] : factors)
        for (unsigned i = 0; i < e; ++i) n *= p;
    return n;
}

namespace {

u64 pollard_brent(u64 n) {
    // n composite, odd, no small factors. Returns a nontrivial factor.
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 q = 1;
        int steps = 0;
        auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            u64 diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            q = mul_mod(q, diff, n);
            if (++steps % 64 == 0) {
                d = gcd_u64(q, n);
                if (d != 1) break;
            }
            if (steps > 1 << 22) break;
        }
        if (d == 1) d = gcd_u64(q, n);
        if (d != 1 && d != n) return d;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

Factorization factorize(u64 n) {
    if (n == 0) throw std::domain_error("factorize: n must be positive");
    if (n > kFactorizationCap)
        throw std::domain_error("factorize: input exceeds the 10^12 scale cap, factorization incomplete");
    Factorization f;
    f.value = n;
    std::vector<u64> primes;
    for (u64 p = 2; p * p <= n && p < 100000; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    for (u64 p : primes) {
        if (!f.factors.empty() && f.factors.back().first == p)
            ++f.factors.back().second;
        else
            f.factors.emplace_back(p, 1u);
    }
    return f;
}

bool is_squarefree(u64 n) {
    auto f = factorize(n);
    for (auto [p, e] : f.factors)
        if (e > 1) return false;
    return true;
}

u64 euler_phi(u64 n) {
    auto f = factorize(n);
    u64 phi = 1;
    for (auto [p, e] : f.factors) {
        phi *= p - 1;
        for (unsigned i = 1; i < e; ++i) phi *= p;
    }
    return phi;
}

u64 inv_mod(u64 a, u64 n) {
    if (n == 0) throw std::domain_error("inv_mod: modulus must be positive");
    i64 t = 0, newt = 1;
    i64 r = static_cast<i64>(n), newr = static_cast<i64>(a % n);
    while (newr != 0) {
        i64 q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    if (r != 1) throw std::domain_error("inv_mod: arguments not coprime");
    if (t < 0) t += static_cast<i64>(n);
    return static_cast<u64>(t);
}

u64 mult_order(u64 a, u64 n) {
    if (n < 2) throw std::domain_error("mult_order: n must be at least 2");
    a %= n;
    if (gcd_u64(a, n) != 1) throw std::domain_error("mult_order: arguments not coprime");
    u64 k = euler_phi(n);
    for (auto [p, e] : factorize(k).factors) {
        (void)e;
        while (k % p == 0 && mod_pow(static_cast<i64>(a), k / p, n) == 1) k /= p;
    }
    return k;
}

int kronecker_symbol(i64 a, i64 n) {
    if (n < 1) throw std::domain_error("kronecker_symbol: n must be positive");
    if (n == 1) return 1;
    int result = 1;
    // factor out twos of n: (a|2) = 0, 1, -1 for a even, a = +-1 (8), a = +-3 (8)
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0) return 0;
        i64 r = a % 8;
        if (r < 0) r += 8;
        if (r == 3 || r == 5) result = -result;
    }
    a %= n;
    if (a < 0) a += n;
    // now n odd positive, 0 <= a < n: Jacobi recursion
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

}  // namespace annih
