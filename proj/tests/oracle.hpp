#pragma once

// Dense reference computations, written independently of the library's
// sparse code paths.

#include "superleib/bilinear.hpp"

#include <gmpxx.h>

#include <vector>

namespace oracle {

using Q = mpq_class;
using Matrix = std::vector<std::vector<Q>>;  // row-major

inline Matrix identity(std::size_t n) {
  Matrix m(n, std::vector<Q>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Matrix c(n, std::vector<Q>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t)
      if (a[i][t] != 0)
        for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
  return c;
}

inline std::size_t rank(Matrix m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != r && m[i][c] != 0) {
        Q f = m[i][c] / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
      }
    ++r;
  }
  return r;
}

inline std::size_t rank_of(const std::vector<superleib::SparseVector>& vs, std::size_t dim) {
  Matrix m;
  for (const auto& v : vs) m.push_back(v.to_dense());
  if (m.empty()) return 0;
  (void)dim;
  return rank(m);
}

/// Faddeev–LeVerrier: coefficients of det(xI - A), low degree first.
inline std::vector<Q> char_poly(const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<Q> c(n + 1, 0);
  c[n] = 1;
  Matrix mk(n, std::vector<Q>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = multiply(a, mk);
    for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    mk = next;
    Matrix am = multiply(a, mk);
    Q tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
    c[n - k] = -tr / Q(static_cast<long>(k));
  }
  return c;
}

/// Matrix of a linear map given column images.
inline Matrix from_columns(const std::vector<superleib::SparseVector>& cols, std::size_t rows) {
  Matrix m(rows, std::vector<Q>(cols.size(), 0));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [i, c] : cols[j]) m[i][j] = c;
  return m;
}

/// Supercommutator of (m|n) matrices on the block parity |i| = (i >= m).
inline Matrix supercommutator(const Matrix& x, int px, const Matrix& y, int py) {
  Matrix a = multiply(x, y), b = multiply(y, x);
  const int s = (px & py) ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) a[i][j] -= s * b[i][j];
  return a;
}

inline Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, std::vector<Q>(n, 0));
  m[i][j] = 1;
  return m;
}

}  // namespace oracle
