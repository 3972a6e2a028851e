#pragma once

#include <optional>
#include <string>
#include <vector>

#include "annih/arith.hpp"

// Embedded class-number data with provenance. Two kinds of records: values
// forced by proven rules (reproducible on demand) and values quoted from
// published tables whose computation is outside this artifact; certificates
// must distinguish the two.

namespace annih {

enum class Provenance { ComputedInternally, PaperTable, PaperAssumedConjectural };

struct ClassNumberRecord {
    enum class Kind { HMinus, HPlus, HQuadratic, HBiquadratic };
    Kind kind = Kind::HPlus;
    u64 n = 0;
    std::optional<u64> value;
    std::optional<bool> prime_claim;  // the source asserts primality
    Provenance provenance = Provenance::PaperTable;
    std::string source;
};

// h_n^+ lookup. Rules, in order:
//   (i)  n an odd prime power with phi(n) <= 66: value 1 (proven).
//   (ii) n composite, n <= 200, phi(n) <= 72, n not in {136, 148, 152}:
//        value 1 (proven).
//   (iii) quoted table values (257 -> 3, 1229 -> 3) and bare primality
//        claims; these are conjectural and taint certificates to Conditional.
// Returns nullopt when nothing is on record.
std::optional<ClassNumberRecord> h_plus_record(u64 n);

// Biquadratic fields Q(sqrt u, sqrt 79) with prime class number, u < 1000.
struct BiquadraticRow {
    u64 u = 0;
    u64 h_f = 0;                    // always 3 in the source table
    std::vector<u64> r_absolute;    // R over Q
    std::vector<u64> r_relative;    // R over Q(sqrt 79)
};

// All 63 rows; validates u = 2 mod 3 and squarefree on first access and
// throws std::logic_error naming the offending row otherwise.
const std::vector<BiquadraticRow>& biquadratic_table();

std::optional<BiquadraticRow> biquadratic_row(u64 u);

// Quaternion group multiplication table in the plain-text group format
// (order line, then order^2 indices). Parsing it must reproduce
// FiniteGroup::quaternion().
const std::string& quaternion_table_text();

std::string provenance_name(Provenance p);

}  // namespace annih
