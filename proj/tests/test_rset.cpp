#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <stdexcept>

#include "annih/rset.hpp"
#include "annih/tables.hpp"

using namespace annih;

namespace {

std::set<u64> member_set(const RSetCertificate& c, const std::string& base = "Q") {
    std::set<u64> out;
    for (const auto& m : c.memberships)
        if (m.base == base) out.insert(m.f);
    return out;
}

}  // namespace

TEST_CASE("residue degrees") {
    CHECK(residue_degree(3, 1093, true) == 7);
    CHECK(residue_degree(2, 257, true) == 8);
    CHECK(residue_degree(7, 1229, true) == 307);
    CHECK(residue_degree(2, 23, false) == 11);
    CHECK(residue_degree(3, 23, false) == 11);
    CHECK(residue_degree(5, 23, false) == 22);
    CHECK_THROWS_AS(residue_degree(23, 23, false), std::domain_error);
}

TEST_CASE("gica primes") {
    CHECK(gica_prime(23) == 3);
    CHECK(gica_prime(31) == 7);  // 3 is a non-residue mod 31
    CHECK_THROWS_AS(gica_prime(17), std::domain_error);
    CHECK_THROWS_AS(gica_prime(7), std::domain_error);
    CHECK_THROWS_AS(gica_prime(15), std::invalid_argument);
}

TEST_CASE("maillet determinant class numbers") {
    CHECK(minus_class_number(3) == 1);
    CHECK(minus_class_number(5) == 1);  // det [[1,3],[2,1]] = -5
    CHECK(maillet_determinant(5) == -5);
    CHECK(minus_class_number(7) == 1);
    CHECK(minus_class_number(23) == 3);
    CHECK(minus_class_number(31) == 9);
    CHECK(minus_class_number(37) == 37);
    mpz_class det23 = abs(maillet_determinant(23));
    mpz_class expect = 3;
    for (int i = 0; i < 10; ++i) expect *= 23;
    CHECK(det23 == expect);
    CHECK_THROWS_AS(minus_class_number(67), std::domain_error);
}

TEST_CASE("h_plus records") {
    auto r23 = h_plus_record(23);
    REQUIRE(r23);
    CHECK(r23->value == 1);
    CHECK(r23->provenance == Provenance::PaperTable);

    auto r140 = h_plus_record(140);  // composite, phi = 48
    REQUIRE(r140);
    CHECK(r140->value == 1);
    CHECK(!h_plus_record(136));  // listed exception
    CHECK(!h_plus_record(9999));

    auto r257 = h_plus_record(257);
    REQUIRE(r257);
    CHECK(r257->value == 3);
    CHECK(r257->provenance == Provenance::PaperAssumedConjectural);
    auto r577 = h_plus_record(577);
    REQUIRE(r577);
    CHECK(!r577->value);
    CHECK(r577->prime_claim == true);
}

TEST_CASE("mt1 certificates") {
    auto c23 = mt1_certificate(23);
    CHECK(c23.overall == Verdict::Valid);
    CHECK(member_set(c23) == std::set<u64>{1, 11});
    REQUIRE(c23.exclusions.size() == 1);
    CHECK(c23.exclusions[0].f == 2);
    CHECK(c23.exclusions[0].witness == 3);
    CHECK(!c23.notes.empty());  // reports f = f'

    auto c7 = mt1_certificate(7);
    CHECK(c7.overall == Verdict::Invalid);
    CHECK(member_set(c7) == std::set<u64>{1});

    // h_31 = 9 is composite: the primality hypothesis must fail
    auto c31 = mt1_certificate(31);
    CHECK(c31.overall == Verdict::Invalid);
    bool primality_failed = false;
    for (const auto& h : c31.hypotheses)
        if (h.status == HypothesisStatus::Failed && h.name.find("prime") != std::string::npos)
            primality_failed = true;
    CHECK(primality_failed);

    CHECK_THROWS_AS(mt1_certificate(21), std::invalid_argument);
}

TEST_CASE("mt3 certificate for n = 8101") {
    auto c = mt3_certificate(9, 5);
    CHECK(c.field == "real-cyclotomic(8101)");
    CHECK(c.overall == Verdict::Conditional);  // h_8101^+ primality is quoted
    CHECK(member_set(c).count(2025) == 1);
    CHECK_THROWS_AS(mt3_certificate(1, 5), std::invalid_argument);  // needs m > 1
    CHECK_THROWS_AS(mt3_certificate(3, 4), std::invalid_argument);
}

TEST_CASE("mt31 certificates") {
    auto c1229 = mt31_certificate(2, 7);
    CHECK(c1229.field == "real-cyclotomic(1229)");
    CHECK(c1229.overall == Verdict::Conditional);
    CHECK(member_set(c1229).count(307) == 1);

    auto c1093 = mt31_certificate(1, 11);
    CHECK(c1093.overall == Verdict::Conditional);
    auto ms = member_set(c1093);
    CHECK(ms.count(7) == 1);   // residue degree of 3
    CHECK(ms.count(13) == 1);  // residue degree of 11

    // no class-number record: certificate degrades to Invalid, only 1 remains
    auto unknown = mt31_certificate(1, 3);  // n = 85 = 9^2 + 4, composite record miss
    CHECK(unknown.overall != Verdict::Valid);
}

TEST_CASE("generalized real-cyclotomic argument") {
    auto c257 = real_cyclotomic_rset(257, 2);
    CHECK(member_set(c257).count(8) == 1);
    CHECK(c257.overall == Verdict::Conditional);

    auto c577 = real_cyclotomic_rset(577, 2);
    CHECK(member_set(c577).count(72) == 1);

    auto c1601 = real_cyclotomic_rset(1601, 2);
    CHECK(member_set(c1601).count(200) == 1);

    CHECK_THROWS_AS(real_cyclotomic_rset(259, 2), std::domain_error);  // not k^2+1 or k^2+4
}

TEST_CASE("subfield exclusions") {
    auto e = mt4_exclusion(23, 2, false);
    CHECK(e.excluded);
    CHECK(e.witness == 3);

    auto e11 = mt4_exclusion(23, 11, false);
    CHECK(!e11.excluded);  // no class data for the degree-11 subfield

    CHECK_THROWS_AS(mt4_exclusion(23, 4, false), std::invalid_argument);   // 4 does not divide 22
    CHECK_THROWS_AS(mt4_exclusion(24, 2, false), std::invalid_argument);   // unit group not cyclic

    // h(Q(sqrt 13)) = 1: nothing to exclude
    auto e13 = mt4_exclusion(13, 2, true);
    CHECK(!e13.excluded);
}

TEST_CASE("corollary consistency") {
    auto checks = corollary_checks(23, {1, 11});
    REQUIRE(checks.size() == 3);
    CHECK(checks[1].applicable);  // (23-1)/2 = 11 in R
    CHECK(checks[1].consistent);  // h+ = 1 = 2^0
    CHECK(!checks[2].applicable); // 23 is not 5 mod 8

    auto none = corollary_checks(13, {1});
    for (const auto& c : none) CHECK(!c.applicable);
}

TEST_CASE("biquadratic certificates") {
    auto c2 = biquadratic_certificate(2);
    CHECK(c2.overall == Verdict::Conditional);
    CHECK(member_set(c2, "Q") == std::set<u64>{1, 2});
    CHECK(member_set(c2, "Q(sqrt 79)") == std::set<u64>{1, 2});

    auto c158 = biquadratic_certificate(158);
    CHECK(c158.overall == Verdict::Conditional);
    CHECK(member_set(c158, "Q") == std::set<u64>{1, 2});

    auto c7 = biquadratic_certificate(7);  // 7 = 1 mod 3
    CHECK(c7.overall == Verdict::Invalid);

    CHECK_THROWS_AS(biquadratic_certificate(12), std::invalid_argument);
    CHECK_THROWS_AS(biquadratic_certificate(79), std::invalid_argument);
}

TEST_CASE("monotonicity: a single failed hypothesis spoils Valid") {
    auto cert = mt1_certificate(23);
    REQUIRE(cert.overall == Verdict::Valid);
    for (size_t i = 0; i < cert.hypotheses.size(); ++i) {
        auto mutant = cert;
        mutant.hypotheses[i].status = HypothesisStatus::Failed;
        mutant.finalize();
        CHECK(mutant.overall == Verdict::Invalid);
        CHECK(member_set(mutant) == std::set<u64>{1});
    }
}

TEST_CASE("structural sanity: concluded degrees divide the extension degree") {
    for (const auto& cert : {mt1_certificate(23), mt31_certificate(2, 7), mt3_certificate(9, 5)}) {
        u64 n = 0;
        auto l = cert.field.find('('), r = cert.field.find(')');
        n = std::stoull(cert.field.substr(l + 1, r - l - 1));
        u64 deg = cert.field.rfind("real", 0) == 0 ? euler_phi(n) / 2 : euler_phi(n);
        for (const auto& m : cert.memberships) CHECK(deg % m.f == 0);
    }
}

TEST_CASE("certificate JSON is schema-tagged and deterministic") {
    auto cert = mt1_certificate(23);
    auto j1 = certificate_json(cert);
    auto j2 = certificate_json(mt1_certificate(23));
    CHECK(j1["schema"] == "rset-cert/1");
    CHECK(j1["overall"] == "Valid");
    CHECK(j1.dump() == j2.dump());
    CHECK(j1["memberships"].size() == 2);
}
