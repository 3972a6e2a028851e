// Compares the serial reference sweeps against the OpenMP-parallel runs and
// checks they agree. Wall-clock only; all work is exact arithmetic.

#include <chrono>
#include <iostream>
#include <string>

#include "annih/verify.hpp"

using namespace annih;

namespace {

template <typename F>
double timed(F&& f, bool& ok) {
    auto t0 = std::chrono::steady_clock::now();
    ok = f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void bench(const std::string& name, bool (*kernel)(bool, std::string*)) {
    std::string ds, dp;
    bool oks = false, okp = false;
    double ts = timed([&] { return kernel(false, &ds); }, oks);
    double tp = timed([&] { return kernel(true, &dp); }, okp);
    std::cout << name << ": serial " << ts << "s, parallel " << tp << "s (x" << (tp > 0 ? ts / tp : 0)
              << "), agreement " << (oks == okp && ds == dp ? "yes" : "NO") << " [" << ds << "]\n";
}

bool pell_kernel(bool parallel, std::string* d) { return pell_sweep(parallel, 60, d); }
bool imag_kernel(bool parallel, std::string* d) { return imaginary_oracle_sweep(parallel, 10'000, d); }
bool kron_kernel(bool parallel, std::string* d) { return kronecker_oracle_sweep(parallel, 700, d); }
bool rep_kernel(bool parallel, std::string* d) { return represents_oracle_sweep(parallel, 2000, d); }
bool theta_kernel(bool parallel, std::string* d) { return theta_machinery_sweep(parallel, d); }

}  // namespace

int main() {
    std::cout << "workers: " << worker_count() << "\n";
    bench("pell-sweep", pell_kernel);
    bench("imaginary-class-numbers", imag_kernel);
    bench("kronecker", kron_kernel);
    bench("represents", rep_kernel);
    bench("theta-machinery", theta_kernel);
    return 0;
}
