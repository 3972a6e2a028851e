#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "annih/arith.hpp"
#include "annih/tables.hpp"

// Executable certificates for the residue-degree sets R_{L/K}: each theorem
// hypothesis is checked and recorded, distinguishing values this artifact
// computes from values quoted out of published tables. A certificate is
// Valid only when everything was computed and passed; a quoted input
// degrades it to Conditional; a failed hypothesis makes it Invalid.

namespace annih {

enum class HypothesisStatus { Computed, AssumedFromTable, Failed };
enum class Verdict { Valid, Invalid, Conditional };

struct Hypothesis {
    std::string name;
    HypothesisStatus status = HypothesisStatus::Computed;
    std::string detail;
};

struct Membership {
    u64 f = 0;
    std::string base;  // "Q" or an intermediate field
    std::string justification;
};

struct Exclusion {
    u64 f = 0;
    u64 witness = 0;  // prime dividing the subfield class number
    std::string justification;
};

struct RSetCertificate {
    std::string field;  // "cyclotomic(n)" | "real-cyclotomic(n)" | "biquadratic(u,79)"
    std::string base = "Q";
    u64 prime = 0;  // the split prime driving the argument, 0 when n/a
    std::vector<Hypothesis> hypotheses;
    std::vector<Membership> memberships;
    std::vector<Exclusion> exclusions;
    std::vector<std::string> notes;
    Verdict overall = Verdict::Invalid;

    bool any_failed() const;
    // overall from the hypothesis statuses; also enforces 1 in memberships
    void finalize();
};

std::string verdict_name(Verdict v);
std::string status_name(HypothesisStatus s);

// schema "rset-cert/1"
nlohmann::json certificate_json(const RSetCertificate& cert);

// Order of p in (Z/nZ)^*, or in its quotient by {+-1} when real.
u64 residue_degree(u64 p, u64 n, bool real_subfield);

// Smallest prime p < q with p = 3 mod 4 and p a quadratic residue mod q.
// q in {2, 3, 5, 7, 17} has no such p and raises a domain error.
u64 gica_prime(u64 q);

// h_p^- by the Maillet determinant: M[a][b] = least positive residue of
// a b^{-1} mod p over 1 <= a, b <= (p-1)/2, and h = |det M| / p^{(p-3)/2}.
// The division is exact by structure; inexactness is an internal error.
u64 minus_class_number(u64 p);
mpz_class maillet_determinant(u64 p);

// q = 7 mod 8, q != 7: h_q prime, gcd screen against h(Q(sqrt -q)), Gica
// prime split and nonprincipal; memberships from residue degrees of that
// prime and of 2, exclusion of 2 via the subfield class group.
RSetCertificate mt1_certificate(u64 q);

// n = (2mq)^2 + 1, m > 1: squarefree, h_n^+ prime, gcd(phi(n)/4, h(Q(sqrt n)))
// = 1, q split and nonprincipal by the n = k^2+1 Pell proposition.
RSetCertificate mt3_certificate(u64 m, u64 q);

// n = ((2m+1)q)^2 + 4, m >= 1: same pipeline with the n = k^2+4 proposition;
// tries q and every prime divisor of 2m+1.
RSetCertificate mt31_certificate(u64 m, u64 q);

// Generalized single-prime argument for n = k^2+1 or k^2+4 (covers shapes
// the literal theorems miss, like n = 257 with p = 2).
RSetCertificate real_cyclotomic_rset(u64 n, u64 p);

struct ExclusionVerdict {
    bool excluded = false;
    u64 witness = 0;
    std::string reason;
};

// Contrapositive of the subfield theorem: if some prime q | h(K_f) with
// q not dividing phi(n)/f then f is not in R. Implemented for f = 2 and
// prime n (quadratic subfield Q(sqrt +-n)).
ExclusionVerdict mt4_exclusion(u64 n, u64 f, bool real_subfield);

struct CorollaryCheck {
    std::string corollary;
    bool applicable = false;
    bool consistent = true;
    std::string detail;
};

// Consistency of the three class-number corollaries against computed or
// recorded values; inconsistency is reported, not thrown.
std::vector<CorollaryCheck> corollary_checks(u64 ell, const std::vector<u64>& r_members);

// F = Q(sqrt u, sqrt 79): u = 2 mod 3 so 3 is inert in Q(sqrt u) and split
// in Q(sqrt 79); the nonprincipality pipeline for the prime above 3 in
// Q(sqrt 79) plus the quoted h_F gives residue degree 2 in R_{F/Q} and in
// R_{F/Q(sqrt 79)}.
RSetCertificate biquadratic_certificate(i64 u);

}  // namespace annih
