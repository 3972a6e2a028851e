#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "annih/arith.hpp"

// Quadratic fields Q(sqrt(d)) with exact arithmetic throughout: reduced
// binary quadratic forms for class numbers, continued-fraction cycles for
// units and norm equations, and the Pell-type insolubility certificates.

namespace annih {

struct QuadraticField {
    i64 d = 0;  // squarefree, != 0, 1
    i64 discriminant = 0;

    explicit QuadraticField(i64 d);
};

enum class Splitting { Split, Inert, Ramified };

struct SplittingType {
    Splitting kind;
    int residue_degree;       // 1, 2, 1
    std::string shape;        // "pp'", "p", "p^2"
};

SplittingType splitting_type(const QuadraticField& k, u64 p);

struct ClassNumber {
    u64 wide = 0;
    u64 narrow = 0;  // equals wide for imaginary fields
    bool norm_minus_one_unit = false;
};

ClassNumber class_number(const QuadraticField& k);

// Independent route for tests: enumerate all candidate forms and reduce.
u64 class_number_imaginary_oracle(i64 discriminant);

// Continued fraction of sqrt(radicand): one full period of the expansion,
// the signed partial denominators (-1)^i d_i (the values of x^2 - N y^2 on
// convergents), and the convergents themselves.
struct FormCycle {
    u64 radicand = 0;
    u64 a0 = 0;
    std::vector<u64> m, d, a;          // states m_i, d_i and digits a_i, i = 0..period
    std::vector<i64> signed_values;    // (-1)^i d_i for i = 1..period
    std::vector<mpz_class> conv_p, conv_q;
    size_t period = 0;

    // fundamental solution of x^2 - N y^2 = 1
    std::pair<mpz_class, mpz_class> unit() const;
    // solution of x^2 - N y^2 = -1 when the period is odd
    std::optional<std::pair<mpz_class, mpz_class>> negative_unit() const;
};

FormCycle form_cycle(u64 radicand);

struct NormSolution {
    bool solvable = false;
    mpz_class x, y;
};

// Decides x^2 - N y^2 = c exactly: any solution can be pushed below a bound
// derived from the fundamental unit, and that range is searched in full.
NormSolution norm_equation(u64 radicand, const mpz_class& c);

// Principal-ideal test in the maximal order of Q(sqrt d), d > 0: decides the
// norm equation x^2 - d y^2 = m (or = 4m when d = 1 mod 4). Requires
// |m| < sqrt(disc)/2, the exactness range of the cycle criterion.
struct RepresentsResult {
    bool represented = false;
    mpz_class x, y;          // witness for x^2 - d y^2 = m (or 4m)
    std::vector<i64> cycle_values;
};

RepresentsResult represents_principal(const QuadraticField& k, i64 m);

enum class PellKind { P4, P5 };

struct PellCertificate {
    PellKind kind;
    u64 n = 0, m = 0;
    u64 radicand = 0;
    mpz_class target;  // +-target has no solutions
    size_t cycle_period = 0;
    std::vector<i64> cycle_values;
    mpz_class search_bound;  // y range searched exhaustively
    bool insoluble = false;
};

// Verifies the two insolubility propositions: x^2-(n^2+1)y^2 = +-m for
// nonsquare m < 2n, and x^2-(n^2+4)y^2 = +-4m for nonsquare m < n, n >= 2.
PellCertificate pell_family_insoluble(PellKind kind, u64 n, u64 m);

// Decides x^2 + q y^2 = t by finite search.
struct ImaginarySearch {
    bool solvable = false;
    u64 x = 0, y = 0;
};

ImaginarySearch imaginary_norm_search(u64 q, u64 t);

// Field norm of x + y sqrt(d).
mpz_class element_norm(const QuadraticField& k, const mpz_class& x, const mpz_class& y);

// Exact Minkowski bound: multiplier * sqrt(radicand) with a certified
// integer floor (pi sandwiched by 333/106 < pi < 355/113).
struct MinkowskiBound {
    mpq_class multiplier;
    u64 radicand = 0;
    u64 floor = 0;
};

MinkowskiBound minkowski_bound(const QuadraticField& k);

}  // namespace annih
