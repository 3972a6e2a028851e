#include "annih/matrix.hpp"

#include <stdexcept>

namespace annih {

namespace {

void sub_scaled_row(ZVec& a, const ZVec& b, const mpz_class& q) {
    for (size_t k = 0; k < a.size(); ++k) a[k] -= q * b[k];
}

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

HnfResult hnf(const ZMat& m) {
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    for (const auto& r : m)
        if (r.size() != cols) throw std::invalid_argument("hnf: ragged matrix");

    ZMat h = m;
    ZMat u(rows, ZVec(rows, 0));
    for (size_t i = 0; i < rows; ++i) u[i][i] = 1;

    size_t r = 0;
    std::vector<int> pivots;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // clear column c below row r by gcd descent
        while (true) {
            size_t best = rows;
            for (size_t i = r; i < rows; ++i) {
                if (h[i][c] != 0 && (best == rows || cmp(abs(h[i][c]), abs(h[best][c])) < 0)) best = i;
            }
            if (best == rows) break;
            std::swap(h[r], h[best]);
            std::swap(u[r], u[best]);
            bool below_nonzero = false;
            for (size_t i = r + 1; i < rows; ++i) {
                if (h[i][c] == 0) continue;
                mpz_class q = floor_div(h[i][c], h[r][c]);
                sub_scaled_row(h[i], h[r], q);
                sub_scaled_row(u[i], u[r], q);
                if (h[i][c] != 0) below_nonzero = true;
            }
            if (!below_nonzero) break;
        }
        if (h[r][c] == 0) continue;
        if (h[r][c] < 0) {
            for (auto& v : h[r]) v = -v;
            for (auto& v : u[r]) v = -v;
        }
        for (size_t i = 0; i < r; ++i) {
            mpz_class q = floor_div(h[i][c], h[r][c]);
            if (q != 0) {
                sub_scaled_row(h[i], h[r], q);
                sub_scaled_row(u[i], u[r], q);
            }
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }

    HnfResult out;
    out.rank = static_cast<int>(r);
    out.h.assign(h.begin(), h.begin() + r);
    out.transform = std::move(u);
    out.pivot_cols = std::move(pivots);
    return out;
}

mpz_class bareiss_determinant(ZMat m) {
    const size_t n = m.size();
    for (const auto& r : m)
        if (r.size() != n) throw std::invalid_argument("bareiss_determinant: matrix not square");
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t s = k + 1;
            while (s < n && m[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(m[k], m[s]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = q;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]);
}

MembershipResult lattice_member(const HnfResult& lattice, const ZVec& x) {
    MembershipResult res;
    ZVec v = x;
    ZVec q(lattice.rank, 0);
    for (int j = 0; j < lattice.rank; ++j) {
        int c = lattice.pivot_cols[j];
        const mpz_class& piv = lattice.h[j][c];
        if (v[c] % piv != 0) {
            res.residual = v;
            return res;
        }
        q[j] = v[c] / piv;
        if (q[j] != 0) sub_scaled_row(v, lattice.h[j], q[j]);
    }
    for (const auto& e : v) {
        if (e != 0) {
            res.residual = v;
            return res;
        }
    }
    res.member = true;
    // coords over the original rows: q * U restricted to the HNF rows
    const size_t rows = lattice.transform.size();
    res.coords.assign(rows, 0);
    for (int j = 0; j < lattice.rank; ++j)
        for (size_t k = 0; k < rows; ++k) res.coords[k] += q[j] * lattice.transform[j][k];
    return res;
}

ZVec row_combination(const ZMat& rows, const ZVec& coeffs) {
    if (rows.size() != coeffs.size()) throw std::invalid_argument("row_combination: size mismatch");
    if (rows.empty()) return {};
    ZVec out(rows[0].size(), 0);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t k = 0; k < out.size(); ++k) out[k] += coeffs[i] * rows[i][k];
    return out;
}

}  // namespace annih
