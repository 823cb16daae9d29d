#pragma once

#include <vector>

#include "hurwitz/mpoly.hpp"

namespace hurwitz {

// Resultant of p and q with respect to v: determinant of the Sylvester matrix
// whose first deg(q) rows carry the coefficients of p (descending, shifted)
// and whose remaining deg(p) rows carry those of q. Under this convention
// Res(X-1, X+1; X) = 2.
//
// The determinant is computed by Bareiss fraction-free elimination; every
// division is exact in the polynomial ring, so no rational functions appear.
inline MPoly resultant(const MPoly& p, const MPoly& q, Var v) {
    if (p.is_zero() || q.is_zero()) return MPoly();
    int m = p.degree(v), n = q.degree(v);
    if (m == 0 && n == 0) return MPoly(Rat(1));
    if (m == 0) return p.pow(static_cast<unsigned>(n));
    if (n == 0) return q.pow(static_cast<unsigned>(m));

    int N = m + n;
    std::vector<MPoly> pc(m + 1), qc(n + 1);
    for (int i = 0; i <= m; ++i) pc[i] = p.coeff_of(v, static_cast<unsigned>(i));
    for (int i = 0; i <= n; ++i) qc[i] = q.coeff_of(v, static_cast<unsigned>(i));

    std::vector<std::vector<MPoly>> M(N, std::vector<MPoly>(N));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) M[r][r + j] = pc[m - j];
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) M[n + r][r + j] = qc[n - j];

    int sign = 1;
    MPoly prev(Rat(1));
    for (int k = 0; k + 1 < N; ++k) {
        if (M[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < N; ++i)
                if (!M[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return MPoly();  // singular: resultant vanishes
            std::swap(M[k], M[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j)
                M[i][j] = divexact(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
            M[i][k] = MPoly();
        }
        prev = M[k][k];
    }
    MPoly det = M[N - 1][N - 1];
    return sign < 0 ? -det : det;
}

// Discriminant-style degeneracy certificate: Res(f, df/dv; v).
inline MPoly resultant_with_derivative(const MPoly& f, Var v) {
    auto cs = f.coeffs_in(v);
    MPoly df;
    for (const auto& [k, c] : cs)
        if (k > 0) df += c * MPoly(Rat(static_cast<long>(k))) * MPoly::variable(v, k - 1);
    return resultant(f, df, v);
}

}  // namespace hurwitz
