#pragma once

// Small dense exact linear algebra used by the lattice code. Matrices here are
// at most rank 8, so clarity wins over speed.

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

namespace thetakit::detail {

using IntMatrix = std::vector<std::vector<long>>;
using RatMatrix = std::vector<std::vector<mpq_class>>;

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    out[i].reserve(m[i].size());
    for (long v : m[i]) out[i].emplace_back(v);
  }
  return out;
}

// Gauss-Jordan inverse; throws on a singular input.
inline RatMatrix inverse(const IntMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix a = to_rational(m);
  RatMatrix inv(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::domain_error("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const mpq_class p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const mpq_class f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// Fraction-free determinant of the leading k x k block, for k = 1..n.
inline std::vector<mpz_class> leading_minors(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<mpz_class> minors;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<mpz_class>> a(k, std::vector<mpz_class>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) a[i][j] = m[i][j];
    mpz_class prev = 1;
    int sign = 1;
    bool zero = false;
    for (std::size_t c = 0; c + 1 < k; ++c) {
      if (a[c][c] == 0) {
        std::size_t piv = c + 1;
        while (piv < k && a[piv][c] == 0) ++piv;
        if (piv == k) {
          zero = true;
          break;
        }
        std::swap(a[piv], a[c]);
        sign = -sign;
      }
      for (std::size_t i = c + 1; i < k; ++i)
        for (std::size_t j = c + 1; j < k; ++j)
          a[i][j] = (a[i][j] * a[c][c] - a[i][c] * a[c][j]) / prev;
      prev = a[c][c];
    }
    minors.push_back(zero ? mpz_class(0) : mpz_class(sign * a[k - 1][k - 1]));
  }
  return minors;
}

}  // namespace thetakit::detail
