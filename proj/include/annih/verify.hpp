#pragma once

#include <string>
#include <vector>

#include "annih/arith.hpp"

// The golden verification suite: every quoted numeric claim, re-derived and
// compared exactly. Sweeps are data-parallel with a serial mode kept as the
// reference implementation (the benchmark target compares the two).

namespace annih {

struct CheckResult {
    std::string id;
    std::string description;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::vector<CheckResult> items;

    bool all_pass() const;
};

// Worker count from the ANNIH_WORKERS environment variable; falls back to
// the OpenMP default (or 1 in a serial build).
int worker_count();

SuiteReport verify_paper(bool parallel = true);

// Sweep kernels, exposed for the benchmark. Each returns true when every
// instance passed and reports instance counts through detail.
bool pell_sweep(bool parallel, u64 n_max, std::string* detail = nullptr);
bool imaginary_oracle_sweep(bool parallel, i64 disc_bound, std::string* detail = nullptr);
bool kronecker_oracle_sweep(bool parallel, u64 prime_bound, std::string* detail = nullptr);
bool represents_oracle_sweep(bool parallel, i64 disc_bound, std::string* detail = nullptr);
bool theta_machinery_sweep(bool parallel, std::string* detail = nullptr);

}  // namespace annih
