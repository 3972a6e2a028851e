#include "annih/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "annih/group_ring.hpp"
#include "annih/quadratic.hpp"
#include "annih/rset.hpp"
#include "annih/stickelberger.hpp"
#include "annih/tables.hpp"

namespace annih {

bool SuiteReport::all_pass() const {
    for (const auto& item : items)
        if (!item.pass) return false;
    return true;
}

int worker_count() {
    if (const char* env = std::getenv("ANNIH_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace {

struct Failures {
    long count = 0;
    std::string first;

    void add(const std::string& what) {
#ifdef _OPENMP
#pragma omp critical(annih_verify_failures)
#endif
        {
            if (count == 0) first = what;
            ++count;
        }
    }
};

std::string counted(long instances, const Failures& f) {
    std::ostringstream os;
    os << instances << " instances";
    if (f.count) os << ", " << f.count << " failed, first: " << f.first;
    return os.str();
}

// ---- item 1: the cyclotomic(23) certificate ------------------------------

CheckResult check_mt1_23() {
    CheckResult r{"rset-q23", "cyclotomic(23) certificate: Valid, R = {1, 11}, 2 excluded", false, ""};
    std::ostringstream os;
    bool ok = true;

    u64 h_imag = class_number(QuadraticField(-23)).wide;
    ok &= h_imag == 3;
    os << "h(Q(sqrt -23)) = " << h_imag;

    mpz_class det = abs(maillet_determinant(23));
    mpz_class expected = 3;
    mpz_class p23(23);
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), p23.get_mpz_t(), 10);
    expected *= pw;
    ok &= det == expected;
    ok &= minus_class_number(23) == 3;
    os << "; |det M| = 3 * 23^10: " << (det == expected ? "yes" : "NO");

    auto rec = h_plus_record(23);
    ok &= rec && rec->value == 1 && rec->provenance != Provenance::PaperAssumedConjectural;
    ok &= gica_prime(23) == 3;
    ok &= gcd_u64(11, h_imag) == 1;
    ok &= !imaginary_norm_search(23, 12).solvable && !imaginary_norm_search(23, 2).solvable &&
          !imaginary_norm_search(23, 8).solvable;

    auto cert = mt1_certificate(23);
    ok &= cert.overall == Verdict::Valid;
    std::set<u64> fs;
    for (const auto& m : cert.memberships)
        if (m.base == "Q") fs.insert(m.f);
    ok &= fs == std::set<u64>{1, 11};
    bool excl2 = false;
    for (const auto& e : cert.exclusions)
        if (e.f == 2 && e.witness == 3) excl2 = true;
    ok &= excl2;
    os << "; overall " << verdict_name(cert.overall) << ", memberships {";
    for (u64 f : fs) os << f << " ";
    os << "}";

    r.pass = ok;
    r.detail = os.str();
    return r;
}

// ---- item 2: real-cyclotomic residue degrees ------------------------------

CheckResult check_residue_degrees(bool parallel) {
    struct Row {
        u64 p, n, f;
    };
    static const Row rows[] = {{2, 257, 8},    {2, 577, 72},   {2, 1601, 200}, {5, 8101, 2025},
                               {7, 1229, 307}, {3, 2029, 169}, {5, 2029, 507}, {3, 3253, 271},
                               {19, 3253, 813},{3, 1093, 7},   {11, 1093, 13}, {5, 7229, 1807},
                               {17, 7229, 139},{5, 9029, 61},  {19, 9029, 2257}};
    Failures fails;
    const int total = static_cast<int>(std::size(rows));
    const int workers = worker_count();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers) if (parallel)
#endif
    for (int i = 0; i < total; ++i) {
        u64 f = residue_degree(rows[i].p, rows[i].n, true);
        if (f != rows[i].f)
            fails.add("(" + std::to_string(rows[i].p) + ", " + std::to_string(rows[i].n) + ") -> " +
                      std::to_string(f) + " expected " + std::to_string(rows[i].f));
    }
    (void)workers;
    return {"residue-degrees", "real-cyclotomic residue degrees, 15 rows", fails.count == 0,
            counted(total, fails)};
}

// ---- item 3: Stickelberger lattice ----------------------------------------

CheckResult check_stickelberger() {
    CheckResult r{"stickelberger", "sigma_1 + sigma_5 outside the Stickelberger ideal at p = 23", false, ""};
    std::ostringstream os;
    bool ok = true;

    auto gen = generator_lattice(23);
    auto paper = paper_lattice_23();
    auto x = GroupRingElement::parse(gen.group, "s1 + s5");

    ok &= !lattice_membership(gen, x).member;
    ok &= !lattice_membership(paper, x).member;
    os << "membership: generator no, basis no";

    auto basis = paper_basis_23();
    for (const auto& b : basis)
        if (!lattice_membership(gen, b).member) {
            ok = false;
            os << "; a basis element escapes the generator lattice";
            break;
        }

    auto rep = elimination_report(paper, x);
    bool ded_a12 = false, ded_a11 = false;
    for (const auto& d : rep.deductions) {
        if (d.variable == 11 && d.value == 1) ded_a12 = true;
        if (d.variable == 10 && d.value == -1) ded_a11 = true;
    }
    ok &= ded_a12 && ded_a11 && rep.contradiction;
    bool paper_pair = false;
    for (const auto& [a, b] : rep.pairs)
        if ((a == "s11" && b == "s22") || (a == "s22" && b == "s11")) paper_pair = true;
    ok &= paper_pair;
    os << "; deductions a12=1, a11=-1: " << (ded_a12 && ded_a11 ? "yes" : "NO")
       << "; contradiction pairs include {s11, s22}: " << (paper_pair ? "yes" : "NO");

    // duplicate printed row: rank 11 of 12, surfaced, non-fatal
    ok &= paper.hnf.rank == 11;
    os << "; basis rank " << paper.hnf.rank << "/12 (known anomaly: two identical printed rows)";

    r.pass = ok;
    r.detail = os.str();
    return r;
}

// ---- item 4: quadratic engine values ---------------------------------------

CheckResult check_quadratic_values() {
    CheckResult r{"quadratic-values", "class numbers, principality, Minkowski floors, norms", false, ""};
    bool ok = true;
    std::ostringstream os;

    ok &= class_number(QuadraticField(-23)).wide == 3;
    ok &= class_number(QuadraticField(79)).wide == 3;
    ok &= class_number(QuadraticField(257)).wide == 3;
    ok &= class_number(QuadraticField(1229)).wide == 3;
    os << "h(-23), h(79), h(257), h(1229) = 3: " << (ok ? "yes" : "NO");

    QuadraticField k79(79);
    auto r3 = represents_principal(k79, 3);
    auto r2 = represents_principal(k79, 2);
    ok &= !r3.represented;
    ok &= r2.represented && r2.x == 9 && r2.y == 1 && element_norm(k79, r2.x, r2.y) == 2;
    os << "; represents(79, 3) = " << (r3.represented ? "true" : "false") << ", represents(79, 2) witness ("
       << r2.x << ", " << r2.y << ")";

    ok &= minkowski_bound(k79).floor == 8;
    ok &= minkowski_bound(QuadraticField(-23)).floor == 3;
    ok &= element_norm(k79, 4, 1) == -63;
    ok &= element_norm(k79, 3, 1) == -70;
    os << "; Minkowski floors 8 and 3; N(4+sqrt79) = -63, N(3+sqrt79) = -70";

    r.pass = ok;
    r.detail = os.str();
    return r;
}

}  // namespace

// ---- item 5: Pell proposition sweep ----------------------------------------

bool pell_sweep(bool parallel, u64 n_max, std::string* detail) {
    Failures fails;
    long total = 0;
    const int workers = worker_count();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers) reduction(+ : total) if (parallel)
#endif
    for (long n = 2; n <= static_cast<long>(n_max); ++n) {
        for (u64 m = 2; m < 2 * static_cast<u64>(n); ++m) {
            if (is_square_u64(m)) continue;
            ++total;
            auto cert = pell_family_insoluble(PellKind::P4, static_cast<u64>(n), m);
            if (!cert.insoluble)
                fails.add("P4 n=" + std::to_string(n) + " m=" + std::to_string(m));
        }
        for (u64 m = 2; m < static_cast<u64>(n); ++m) {
            if (is_square_u64(m)) continue;
            ++total;
            auto cert = pell_family_insoluble(PellKind::P5, static_cast<u64>(n), m);
            if (!cert.insoluble)
                fails.add("P5 n=" + std::to_string(n) + " m=" + std::to_string(m));
        }
    }
    (void)workers;
    if (detail) *detail = counted(total, fails);
    return fails.count == 0;
}

// ---- item 6: theta_f(S) machinery ------------------------------------------

bool theta_machinery_sweep(bool parallel, std::string* detail) {
    Failures fails;
    long total = 0;

    // the quaternion example: {1, i, j, k} must be admissible at f = 4
    auto q8 = FiniteGroup::quaternion();
    auto sys8 = admissible_sets(q8, 4);
    ++total;
    bool found_ijk = false;
    for (const auto& s : sys8.sets)
        if (s.elements == std::vector<int>{0, 1, 2, 3}) found_ijk = true;
    if (!found_ijk) fails.add("Q8 f=4 misses {1, i, j, k}");

    // every admissible set over every cyclic group |G| <= 24 certifies
    const int workers = worker_count();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers) reduction(+ : total) if (parallel)
#endif
    for (int n = 1; n <= 24; ++n) {
        auto g = FiniteGroup::cyclic(n);
        for (u64 f = 1; f <= static_cast<u64>(n); ++f) {
            if (static_cast<u64>(n) % f != 0) continue;
            auto sys = admissible_sets(g, f);
            u64 h_order = static_cast<u64>(sys.intersection.order());
            for (const auto& s : sys.sets) {
                ++total;
                auto cert = annihilation_certificate(g, f, s.elements);
                if (!cert.pass || cert.multiplier != mpz_class(static_cast<unsigned long>(f / h_order)))
                    fails.add("cyclic(" + std::to_string(n) + ") f=" + std::to_string(f));
            }
        }
    }

    // theta_f(S) never collapses to the trace for cyclic prime-power
    // conductors (f > 1); n = 8 genuinely fails this, hence the cyclic filter
    static const u64 conductors[] = {3, 4, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43, 47, 49};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers) reduction(+ : total) if (parallel)
#endif
    for (long idx = 0; idx < static_cast<long>(std::size(conductors)); ++idx) {
        u64 n = conductors[idx];
        auto g = FiniteGroup::unit_group_mod(n, false);
        u64 phi = static_cast<u64>(g->order());
        for (u64 f = 2; f <= phi; ++f) {
            if (phi % f != 0) continue;
            auto sys = admissible_sets(g, f);
            for (const auto& s : sys.sets) {
                ++total;
                if (is_trace(theta_of(g, s.elements)))
                    fails.add("theta = N at conductor " + std::to_string(n) + " f=" + std::to_string(f));
            }
        }
    }

    // perturbed sets: breaking transversality must break certification
    {
        auto g12 = FiniteGroup::cyclic(12);
        auto sys = admissible_sets(g12, 4);
        if (sys.sets.empty()) {
            fails.add("cyclic(12) f=4 has no admissible sets");
        } else {
            auto s = sys.sets.front().elements;
            // duplicate a coset: move the member of one H-coset onto another's
            Subgroup h = sys.intersection;
            auto ids = h.coset_ids();
            std::vector<int> bad = s;
            bad[0] = -1;
            for (int e = 0; e < 12 && bad[0] < 0; ++e)
                if (ids[e] == ids[s[1]] && e != s[1]) bad[0] = e;
            std::sort(bad.begin(), bad.end());
            ++total;
            if (annihilation_certificate(g12, 4, bad).pass) fails.add("perturbed cyclic(12) set certified");
        }
        // a non-transversal quaternion subset
        ++total;
        if (annihilation_certificate(q8, 4, {0, 4, 1, 2}).pass) fails.add("perturbed Q8 set certified");
    }

    if (detail) *detail = counted(total, fails);
    return fails.count == 0;
}

// ---- item 7: oracle equivalences -------------------------------------------

bool imaginary_oracle_sweep(bool parallel, i64 disc_bound, std::string* detail) {
    Failures fails;
    long total = 0;
    const int workers = worker_count();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers) reduction(+ : total) if (parallel)
#endif
    for (i64 d = -2; d >= -disc_bound; --d) {
        if (!is_squarefree(static_cast<u64>(-d))) continue;
        i64 disc = ((d % 4) + 4) % 4 == 1 ? d : 4 * d;
        if (-disc >= disc_bound) continue;
        ++total;
        u64 lhs = class_number(QuadraticField(d)).wide;
        u64 rhs = class_number_imaginary_oracle(disc);
        if (lhs != rhs)
            fails.add("D = " + std::to_string(disc) + ": " + std::to_string(lhs) + " vs " +
                      std::to_string(rhs));
    }
    (void)workers;
    if (detail) *detail = counted(total, fails);
    return fails.count == 0;
}

bool kronecker_oracle_sweep(bool parallel, u64 prime_bound, std::string* detail) {
    Failures fails;
    long total = 0;
    const int workers = worker_count();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers) reduction(+ : total) if (parallel)
#endif
    for (long p = 3; p < static_cast<long>(prime_bound); p += 2) {
        if (!is_prime(static_cast<u64>(p))) continue;
        for (long a = 1; a < p; ++a) {
            ++total;
            u64 e = mod_pow(a, static_cast<u64>((p - 1) / 2), static_cast<u64>(p));
            int euler = e == 1 ? 1 : -1;
            if (kronecker_symbol(a, p) != euler)
                fails.add("(" + std::to_string(a) + " | " + std::to_string(p) + ")");
        }
    }
    (void)workers;
    if (detail) *detail = counted(total, fails);
    return fails.count == 0;
}

bool represents_oracle_sweep(bool parallel, i64 disc_bound, std::string* detail) {
    Failures fails;
    long total = 0;
    const int workers = worker_count();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers) reduction(+ : total) if (parallel)
#endif
    for (i64 d = 2; d < disc_bound; ++d) {
        if (d == 1 || !is_squarefree(static_cast<u64>(d))) continue;
        QuadraticField k(d);
        if (k.discriminant >= disc_bound) continue;
        for (i64 m = -8; m <= 8; ++m) {
            if (m == 0 || 4 * m * m >= k.discriminant) continue;
            ++total;
            auto res = represents_principal(k, m);
            mpz_class target = k.discriminant == d ? mpz_class(4 * m) : mpz_class(m);
            if (res.represented) {
                if (element_norm(k, res.x, res.y) != target)
                    fails.add("bad witness d=" + std::to_string(d) + " m=" + std::to_string(m));
            } else {
                // bounded search must agree that nothing is there
                bool brute = false;
                for (mpz_class y = 0; y <= 40 && !brute; ++y) {
                    mpz_class t = mpz_class(d) * y * y + target;
                    if (t >= 0 && mpz_perfect_square_p(t.get_mpz_t())) brute = true;
                }
                if (brute) fails.add("missed solution d=" + std::to_string(d) + " m=" + std::to_string(m));
            }
        }
    }
    (void)workers;
    if (detail) *detail = counted(total, fails);
    return fails.count == 0;
}

namespace {

CheckResult check_oracles(bool parallel) {
    std::string d1, d2, d3;
    bool a = imaginary_oracle_sweep(parallel, 10'000, &d1);
    bool b = kronecker_oracle_sweep(parallel, 500, &d2);
    bool c = represents_oracle_sweep(parallel, 2000, &d3);
    return {"oracle-equivalences", "independent-route comparisons (class numbers, symbols, norm forms)",
            a && b && c, "imaginary: " + d1 + "; kronecker: " + d2 + "; represents: " + d3};
}

// ---- item 8: biquadratic table and certificate -----------------------------

CheckResult check_biquadratic() {
    CheckResult r{"biquadratic", "section-5 table validation and the u = 2 certificate", false, ""};
    std::ostringstream os;
    bool ok = true;
    try {
        const auto& rows = biquadratic_table();
        ok &= rows.size() == 63;
        for (const auto& row : rows) ok &= row.u % 3 == 2 && is_squarefree(row.u) && row.h_f == 3;
        os << rows.size() << " rows validated";
    } catch (const std::exception& e) {
        ok = false;
        os << "table load failed: " << e.what();
    }

    auto cert = biquadratic_certificate(2);
    ok &= cert.overall == Verdict::Conditional;
    auto has = [&](u64 f, const std::string& base) {
        for (const auto& m : cert.memberships)
            if (m.f == f && m.base == base) return true;
        return false;
    };
    ok &= has(1, "Q") && has(2, "Q") && has(1, "Q(sqrt 79)") && has(2, "Q(sqrt 79)");
    ok &= !cert.any_failed();
    os << "; u = 2 certificate " << verdict_name(cert.overall) << " with R over Q and over Q(sqrt 79) both containing {1, 2}";

    r.pass = ok;
    r.detail = os.str();
    return r;
}

}  // namespace

SuiteReport verify_paper(bool parallel) {
    SuiteReport report;
    report.items.push_back(check_mt1_23());
    report.items.push_back(check_residue_degrees(parallel));
    report.items.push_back(check_stickelberger());
    report.items.push_back(check_quadratic_values());
    {
        std::string d;
        bool ok = pell_sweep(parallel, 40, &d);
        report.items.push_back({"pell-sweep", "both insolubility propositions, n = 2..40, full m ranges", ok, d});
    }
    {
        std::string d;
        bool ok = theta_machinery_sweep(parallel, &d);
        report.items.push_back({"theta-machinery", "admissible sets, certificates, trace separation, perturbations", ok, d});
    }
    report.items.push_back(check_oracles(parallel));
    report.items.push_back(check_biquadratic());
    return report;
}

}  // namespace annih
