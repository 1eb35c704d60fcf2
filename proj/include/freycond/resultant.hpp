#pragma once

#include <utility>
#include <vector>

#include "freycond/errors.hpp"
#include "freycond/poly.hpp"

namespace freycond {

/// Fraction-free (Bareiss) determinant. Every division is exact in an
/// integral domain, so this works unchanged over Z, Q[t], Q[t][s], fields.
template <class D>
D determinant_bareiss(std::vector<std::vector<D>> m) {
    const std::size_t n = m.size();
    if (n == 0) return D(1);
    bool negate = false;
    D prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m[k][k])) {
            std::size_t piv = k + 1;
            while (piv < n && is_zero(m[piv][k])) ++piv;
            if (piv == n) return D(0);
            std::swap(m[k], m[piv]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                D num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num / prev;
            }
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

/// Sylvester-matrix resultant: Res(A,B) = lc(A)^{deg B} * prod B(alpha).
template <class D>
D resultant(const Poly<D>& a, const Poly<D>& b) {
    if (a.is_zero() && b.is_zero()) fail(ErrorKind::ZeroInput, "resultant of two zero polynomials");
    if (a.is_zero() || b.is_zero()) return D(0);
    const int m = a.degree(), n = b.degree();
    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<D>> syl(size, std::vector<D>(size, D(0)));
    for (int row = 0; row < n; ++row)
        for (int i = 0; i <= m; ++i)
            syl[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + i)] = a.coeff(m - i);
    for (int row = 0; row < m; ++row)
        for (int i = 0; i <= n; ++i)
            syl[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + i)] = b.coeff(n - i);
    return determinant_bareiss(std::move(syl));
}

/// Delta(H) = (-1)^{n(n-1)/2} Res(H, H') / lc(H).
template <class D>
D discriminant_poly(const Poly<D>& h) {
    if (h.is_zero()) fail(ErrorKind::ZeroInput, "discriminant of zero polynomial");
    const int n = h.degree();
    if (n < 1) fail(ErrorKind::ZeroInput, "discriminant of a constant");
    D res = resultant(h, h.derivative()) / h.lc();
    return ((n * (n - 1) / 2) % 2 == 1) ? -res : res;
}

}  // namespace freycond
