// Dense exact linear algebra over the rational function field, just enough
// for basis transitions and small interpolation systems.

#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "qt_poly.hpp"

namespace macq {

using QTMatrix = std::vector<std::vector<QTRatio>>;

inline QTMatrix qt_identity(int n) {
  QTMatrix m(n, std::vector<QTRatio>(n));
  for (int i = 0; i < n; ++i) m[i][i] = QTRatio(1);
  return m;
}

// Gauss-Jordan inverse; throws std::domain_error when singular
inline QTMatrix qt_invert(QTMatrix a) {
  int n = int(a.size());
  QTMatrix inv = qt_identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    QTRatio d = a[col][col];
    for (int c = 0; c < n; ++c) {
      a[col][c] /= d;
      inv[col][c] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      QTRatio f = a[r][col];
      for (int c = 0; c < n; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

// solve the square system a x = b; throws std::domain_error when singular
inline std::vector<QTRatio> qt_solve(QTMatrix a, std::vector<QTRatio> b) {
  int n = int(a.size());
  if (int(b.size()) != n) throw std::invalid_argument("dimension mismatch");
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("singular system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    QTRatio d = a[col][col];
    for (int c = col; c < n; ++c) a[col][c] /= d;
    b[col] /= d;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      QTRatio f = a[r][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  return b;
}

}  // namespace macq
