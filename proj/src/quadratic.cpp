#include "annih/quadratic.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace annih {

namespace {

constexpr i64 kDiscriminantCap = 10'000'000;

i64 mod4(i64 v) {
    i64 r = v % 4;
    return r < 0 ? r + 4 : r;
}

bool mpz_is_square(const mpz_class& v) {
    return v >= 0 && mpz_perfect_square_p(v.get_mpz_t());
}

mpz_class mpz_isqrt(const mpz_class& v) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

}  // namespace

QuadraticField::QuadraticField(i64 dd) : d(dd) {
    if (d == 0 || d == 1) throw std::domain_error("QuadraticField: d must not be 0 or 1");
    if (!is_squarefree(static_cast<u64>(d < 0 ? -d : d)))
        throw std::domain_error("QuadraticField: d must be squarefree");
    discriminant = mod4(d) == 1 ? d : 4 * d;
    if (discriminant > kDiscriminantCap || discriminant < -kDiscriminantCap)
        throw std::domain_error("QuadraticField: discriminant beyond desk scale");
}

SplittingType splitting_type(const QuadraticField& k, u64 p) {
    if (!is_prime(p)) throw std::domain_error("splitting_type: p must be prime");
    int sym = kronecker_symbol(k.discriminant, static_cast<i64>(p));
    if (sym == 1) return {Splitting::Split, 1, "pp'"};
    if (sym == -1) return {Splitting::Inert, 2, "p"};
    return {Splitting::Ramified, 1, "p^2"};
}

// ---- imaginary forms ----------------------------------------------------

namespace {

using Form = std::tuple<i64, i64, i64>;

Form reduce_imaginary(i64 a, i64 b, i64 c) {
    while (true) {
        if (b > a || b <= -a) {
            // shift b into (-a, a]
            i64 t = b % (2 * a);
            if (t > a) t -= 2 * a;
            if (t <= -a) t += 2 * a;
            c += (t * t - b * b) / (4 * a);
            b = t;
        }
        if (a > c) {
            std::swap(a, c);
            b = -b;
            continue;
        }
        break;
    }
    if ((a == c || a == -b) && b < 0) b = -b;
    return {a, b, c};
}

}  // namespace

u64 class_number_imaginary_oracle(i64 discriminant) {
    if (discriminant >= 0) throw std::domain_error("class_number_imaginary_oracle: needs D < 0");
    std::set<Form> reduced;
    i64 bound = static_cast<i64>(isqrt_u64(static_cast<u64>(-discriminant) / 3));
    for (i64 a = 1; a <= bound; ++a) {
        for (i64 b = -a; b <= a; ++b) {
            i64 num = b * b - discriminant;
            if (num % (4 * a) != 0) continue;
            i64 c = num / (4 * a);
            if (c < a) continue;
            reduced.insert(reduce_imaginary(a, b, c));
        }
    }
    return reduced.size();
}

// ---- real (indefinite) forms --------------------------------------------

namespace {

bool indefinite_reduced(i64 a, i64 b, i64 c, i64 disc, i64 s) {
    (void)c;
    if (b <= 0 || b > s) return false;  // 0 < b < sqrt(D)
    i64 aa = a < 0 ? -a : a;
    // sqrt(D) - 2|a| < b  <=>  D < (b + 2|a|)^2
    if (disc >= (b + 2 * aa) * (b + 2 * aa)) return false;
    // b < sqrt(D) + 2|a| is automatic from b <= s
    // also need 2|a| - sqrt(D) < b when 2|a| > sqrt(D)
    if (2 * aa > s && (2 * aa - b) * (2 * aa - b) >= disc && 2 * aa - b > 0) return false;
    return true;
}

Form rho_indefinite(const Form& f, i64 disc, i64 s) {
    auto [a, b, c] = f;
    i64 cc = c < 0 ? -c : c;
    i64 b2 = s - (((s + b) % (2 * cc)) + 2 * cc) % (2 * cc);
    i64 c2 = (b2 * b2 - disc) / (4 * c);
    return {c, b2, c2};
}

}  // namespace

ClassNumber class_number(const QuadraticField& k) {
    ClassNumber out;
    i64 disc = k.discriminant;
    if (disc < 0) {
        u64 count = 0;
        i64 bound = static_cast<i64>(isqrt_u64(static_cast<u64>(-disc) / 3));
        for (i64 a = 1; a <= bound; ++a) {
            for (i64 b = -a; b <= a; ++b) {
                if (mod4(b * b - disc) != 0) continue;
                i64 c = (b * b - disc) / (4 * a);
                if ((b * b - disc) % (4 * a) != 0 || c < a) continue;
                if ((std::abs(b) == a || a == c) && b < 0) continue;
                ++count;
            }
        }
        out.wide = out.narrow = count;
        return out;
    }

    i64 s = static_cast<i64>(isqrt_u64(static_cast<u64>(disc)));
    std::set<Form> reduced;
    for (i64 b = (disc % 2 == 0) ? 2 : 1; b <= s; b += 2) {
        i64 t = (disc - b * b) / 4;  // = -a*c > 0
        for (i64 aa = 1; aa * aa <= t; ++aa) {
            if (t % aa != 0) continue;
            for (i64 a : {aa, t / aa}) {
                i64 c = -t / a;
                for (int sign = 0; sign < 2; ++sign) {
                    i64 fa = sign ? -a : a, fc = sign ? -c : c;
                    if (indefinite_reduced(fa, b, fc, disc, s)) reduced.insert({fa, b, fc});
                }
                if (aa == t / aa) break;
            }
        }
    }

    std::set<Form> visited;
    u64 cycles = 0;
    bool principal_has_minus_one = false;
    // principal form, walked into its reduced cycle
    i64 b0 = s;
    if ((b0 % 2 + 2) % 2 != (disc % 2 + 2) % 2) --b0;
    Form principal{1, b0, (b0 * b0 - disc) / 4};
    {
        std::set<Form> seen;
        Form f = principal;
        while (!indefinite_reduced(std::get<0>(f), std::get<1>(f), std::get<2>(f), disc, s) ||
               !seen.insert(f).second)
            f = rho_indefinite(f, disc, s);
        Form start = f;
        do {
            if (std::get<0>(f) == -1) principal_has_minus_one = true;
            visited.insert(f);
            f = rho_indefinite(f, disc, s);
        } while (f != start);
        ++cycles;
    }
    for (const auto& f0 : reduced) {
        if (visited.count(f0)) continue;
        ++cycles;
        Form f = f0;
        do {
            visited.insert(f);
            f = rho_indefinite(f, disc, s);
        } while (f != f0);
    }

    out.narrow = cycles;
    out.norm_minus_one_unit = principal_has_minus_one;
    out.wide = principal_has_minus_one ? cycles : cycles / 2;
    return out;
}

// ---- continued fractions -------------------------------------------------

FormCycle form_cycle(u64 radicand) {
    if (is_square_u64(radicand)) throw std::domain_error("form_cycle: radicand must not be a square");
    FormCycle fc;
    fc.radicand = radicand;
    fc.a0 = isqrt_u64(radicand);
    fc.m = {0};
    fc.d = {1};
    fc.a = {fc.a0};
    fc.conv_p = {mpz_class(static_cast<unsigned long>(fc.a0))};
    fc.conv_q = {1};
    mpz_class pm1 = 1, qm1 = 0;  // p_{-1}, q_{-1}
    u64 m = 0, d = 1;
    u64 m1 = 0, d1 = 0;
    for (size_t i = 1;; ++i) {
        u64 mn = fc.a.back() * d - m;
        u64 dn = (radicand - mn * mn) / d;
        if (i == 1) {
            m1 = mn;
            d1 = dn;
        } else if (mn == m1 && dn == d1) {
            fc.period = i - 1;
            break;
        }
        u64 an = (fc.a0 + mn) / dn;
        fc.m.push_back(mn);
        fc.d.push_back(dn);
        fc.a.push_back(an);
        fc.signed_values.push_back((i % 2 == 0) ? static_cast<i64>(dn) : -static_cast<i64>(dn));
        mpz_class pn = mpz_class(static_cast<unsigned long>(an)) * fc.conv_p.back() + pm1;
        mpz_class qn = mpz_class(static_cast<unsigned long>(an)) * fc.conv_q.back() + qm1;
        pm1 = fc.conv_p.back();
        qm1 = fc.conv_q.back();
        fc.conv_p.push_back(pn);
        fc.conv_q.push_back(qn);
        m = mn;
        d = dn;
        if (i > 10'000'000) throw std::logic_error("form_cycle: period runaway");
    }
    return fc;
}

std::pair<mpz_class, mpz_class> FormCycle::unit() const {
    // p_{l-1}^2 - N q_{l-1}^2 = (-1)^l
    mpz_class x = conv_p[period - 1], y = conv_q[period - 1];
    if (period % 2 == 0) return {x, y};
    mpz_class N(static_cast<unsigned long>(radicand));
    return {x * x + N * y * y, 2 * x * y};
}

std::optional<std::pair<mpz_class, mpz_class>> FormCycle::negative_unit() const {
    if (period % 2 == 0) return std::nullopt;
    return std::make_pair(conv_p[period - 1], conv_q[period - 1]);
}

NormSolution norm_equation(u64 radicand, const mpz_class& c) {
    if (c == 0) return {true, 0, 0};
    auto fc = form_cycle(radicand);
    auto [x1, y1] = fc.unit();
    mpz_class N(static_cast<unsigned long>(radicand));
    mpz_class absc = abs(c);
    // Any solution can be multiplied by a power of the fundamental unit into
    // 0 <= y <= y1 sqrt(|c| / (2 (x1 -+ 1))); search that range in full.
    mpz_class denom = c > 0 ? mpz_class(2 * (x1 + 1)) : mpz_class(2 * (x1 - 1));
    mpz_class ybound = mpz_isqrt(y1 * y1 * absc / denom) + 2;
    for (mpz_class y = 0; y <= ybound; ++y) {
        mpz_class t = N * y * y + c;
        if (mpz_is_square(t)) return {true, mpz_isqrt(t), y};
    }
    return {false, 0, 0};
}

namespace {

// 2x2 integer matrix acting on forms on the right: (f.M)(v) = f(Mv).
struct Mat2 {
    mpz_class p = 1, q = 0, r = 0, s = 1;

    Mat2 times_step(const mpz_class& t) const {
        // right-multiply by [[0, -1], [1, t]]
        return {q, t * q - p, s, t * s - r};
    }
    Mat2 inverse_unimodular() const {
        mpz_class det = p * s - q * r;  // +-1 for the matrices built here
        return {s / det, -q / det, -r / det, p / det};
    }
    Mat2 operator*(const Mat2& o) const {
        return {p * o.p + q * o.r, p * o.q + q * o.s, r * o.p + s * o.r, r * o.q + s * o.s};
    }
};

// One rho step with the proper normalization for non-reduced forms; also
// advances along the cycle once the form is reduced.
Form rho_step(const Form& f, i64 disc, i64 s, Mat2& m) {
    auto [a, b, c] = f;
    i64 cc = c < 0 ? -c : c;
    i64 b2;
    if (cc > s) {
        // normalize into (-|c|, |c|]
        i64 r = ((-b) % (2 * cc) + 2 * cc) % (2 * cc);
        b2 = r > cc ? r - 2 * cc : r;
    } else {
        b2 = s - (((s + b) % (2 * cc)) + 2 * cc) % (2 * cc);
    }
    i64 c2 = (b2 * b2 - disc) / (4 * c);
    m = m.times_step(mpz_class((b + b2) / (2 * c)));
    return {c, b2, c2};
}

// Decides whether the principal form of discriminant disc represents n
// primitively, producing a witness vector when it does.
bool principal_represents_primitively(i64 disc, i64 n, mpz_class* wx, mpz_class* wy) {
    i64 s = static_cast<i64>(isqrt_u64(static_cast<u64>(disc)));
    i64 delta = (disc % 2 + 2) % 2;
    Form principal{1, delta, (delta * delta - disc) / 4};
    if (n == 1) {
        *wx = 1;
        *wy = 0;
        return true;
    }

    auto reduce = [&](Form f, Mat2& m) {
        int guard = 0;
        while (!indefinite_reduced(std::get<0>(f), std::get<1>(f), std::get<2>(f), disc, s)) {
            f = rho_step(f, disc, s, m);
            if (++guard > 100'000) throw std::logic_error("represents_principal: reduction runaway");
        }
        return f;
    };

    Mat2 mp;
    Form p0 = reduce(principal, mp);

    i64 an = n < 0 ? -n : n;
    for (i64 b = 0; b < 2 * an; ++b) {
        if (((b * b - disc) % (4 * an) + 4 * an) % (4 * an) != 0) continue;
        Form g{n, b, (b * b - disc) / (4 * n)};
        Mat2 mg;
        Form gr = reduce(g, mg);
        // walk the principal cycle looking for the reduced candidate
        Mat2 mw = mp;
        Form f = p0;
        int guard = 0;
        do {
            if (f == gr) {
                // principal . mw == gr == g . mg, and g(1, 0) = n
                Mat2 t = mw * mg.inverse_unimodular();
                *wx = t.p;
                *wy = t.r;
                return true;
            }
            f = rho_step(f, disc, s, mw);
            if (++guard > 1'000'000) throw std::logic_error("represents_principal: cycle runaway");
        } while (f != p0);
    }
    return false;
}

}  // namespace

RepresentsResult represents_principal(const QuadraticField& k, i64 m) {
    if (k.d <= 0) throw std::domain_error("represents_principal: needs a real quadratic field");
    if (m == 0) throw std::domain_error("represents_principal: m must be nonzero");
    // exactness range |m| < sqrt(disc)/2
    if (4 * m * m >= k.discriminant) throw std::domain_error("represents_principal: use brute_force_norm_search instead");

    RepresentsResult res;
    auto fc = form_cycle(static_cast<u64>(k.d));
    res.cycle_values = fc.signed_values;
    const bool odd_disc = mod4(k.d) == 1;
    mpz_class target = odd_disc ? mpz_class(4 * m) : mpz_class(m);

    // split off square content: f(gu, gv) = g^2 f(u, v)
    i64 am = m < 0 ? -m : m;
    for (i64 g = 1; g * g <= am; ++g) {
        if (m % (g * g) != 0) continue;
        mpz_class u, v;
        if (!principal_represents_primitively(k.discriminant, m / (g * g), &u, &v)) continue;
        res.represented = true;
        mpz_class x = odd_disc ? mpz_class(g * (2 * u + v)) : mpz_class(g * u);
        mpz_class y = odd_disc ? mpz_class(g * v) : mpz_class(g * v);
        // shrink the witness into the fundamental domain of the unit action
        auto [x1, y1] = fc.unit();
        mpz_class d(k.d);
        while (true) {
            mpz_class yf = y1 * x + x1 * y;   // forward automorph
            mpz_class yb = -y1 * x + x1 * y;  // inverse automorph
            if (abs(yf) < abs(y)) {
                x = x1 * x + d * y1 * y;
                y = yf;
            } else if (abs(yb) < abs(y)) {
                x = x1 * x - d * y1 * y;
                y = yb;
            } else {
                break;
            }
        }
        if (y < 0) y = -y;
        mpz_class x2 = target + d * y * y;
        res.x = mpz_isqrt(x2);
        res.y = y;
        return res;
    }
    res.represented = false;
    return res;
}

PellCertificate pell_family_insoluble(PellKind kind, u64 n, u64 m) {
    PellCertificate cert;
    cert.kind = kind;
    cert.n = n;
    cert.m = m;
    if (m == 0 || is_square_u64(m)) throw std::domain_error("pell: proposition hypotheses violated (m square)");
    if (kind == PellKind::P4) {
        if (n < 1 || m >= 2 * n) throw std::domain_error("pell: proposition hypotheses violated (need m < 2n)");
        cert.radicand = n * n + 1;
        cert.target = mpz_class(static_cast<unsigned long>(m));
    } else {
        if (n < 2 || m >= n) throw std::domain_error("pell: proposition hypotheses violated (need n >= 2, m < n)");
        cert.radicand = n * n + 4;
        cert.target = 4 * mpz_class(static_cast<unsigned long>(m));
    }
    auto fc = form_cycle(cert.radicand);
    cert.cycle_period = fc.period;
    cert.cycle_values = fc.signed_values;
    auto [x1, y1] = fc.unit();
    cert.search_bound = mpz_isqrt(y1 * y1 * cert.target / (2 * (x1 - 1))) + 2;

    auto plus = norm_equation(cert.radicand, cert.target);
    auto minus = norm_equation(cert.radicand, -cert.target);
    cert.insoluble = !plus.solvable && !minus.solvable;
    return cert;
}

ImaginarySearch imaginary_norm_search(u64 q, u64 t) {
    if (q == 0) throw std::domain_error("imaginary_norm_search: q must be positive");
    for (u64 y = 0; q * y * y <= t; ++y) {
        u64 rest = t - q * y * y;
        if (is_square_u64(rest)) return {true, isqrt_u64(rest), y};
    }
    return {false, 0, 0};
}

mpz_class element_norm(const QuadraticField& k, const mpz_class& x, const mpz_class& y) {
    return x * x - mpz_class(k.d) * y * y;
}

MinkowskiBound minkowski_bound(const QuadraticField& k) {
    MinkowskiBound b;
    if (k.d > 0) {
        // sqrt(D) / 2
        b.multiplier = mpq_class(1, 2);
        b.radicand = static_cast<u64>(k.discriminant);
        b.floor = isqrt_u64(b.radicand) / 2;
        return b;
    }
    // (2/pi) sqrt(|D|), floor certified by 333/106 < pi < 355/113
    b.multiplier = mpq_class(2);
    b.radicand = static_cast<u64>(-k.discriminant);
    u64 k_lo = 0;
    while ((355 * (k_lo + 1)) * (355 * (k_lo + 1)) <= 4 * 113ull * 113ull * b.radicand) ++k_lo;
    // k_lo <= value; certify k_lo + 1 > value
    u64 up = 333 * (k_lo + 1);
    if (up * up <= 4 * 106ull * 106ull * b.radicand)
        throw std::logic_error("minkowski_bound: pi sandwich inconclusive at this scale");
    b.floor = k_lo;
    return b;
}

}  // namespace annih
