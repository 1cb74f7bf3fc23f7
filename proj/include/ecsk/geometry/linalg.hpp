#pragma once
// Dense Gauss-Jordan elimination over doubles or jets. Pivots are chosen by
// the magnitude of their values, so jet derivatives follow the same
// elimination as the point values.

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ecsk/forms/tensor.hpp"

namespace ecsk::geometry {

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline double reciprocal_of(double x) { return 1.0 / x; }
inline exprkit::Jet reciprocal_of(const exprkit::Jet& x) { return exprkit::reciprocal(x); }

inline bool is_exact_zero(double x) { return x == 0.0; }
inline bool is_exact_zero(const exprkit::Jet& x) {
  for (int i = 0; i < exprkit::row_count(x.order()); ++i) {
    if (x.coeff(i) != 0.0) return false;
  }
  return true;
}

// Solves A X = B in place. A is n x n and B is n x m, both row-major.
// Returns det(A). Throws SingularMatrixError when a pivot value falls to
// `pivot_floor` or below.
template <class T>
T gauss_jordan(std::vector<T>& a, std::vector<T>& b, int n, int m, double pivot_floor = 0.0) {
  T det(1.0);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(forms::value_of(a[col * n + col]));
    for (int r = col + 1; r < n; ++r) {
      const double v = std::abs(forms::value_of(a[r * n + col]));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (!(best > pivot_floor)) throw SingularMatrixError("matrix is singular to working precision");
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(a[piv * n + c], a[col * n + c]);
      for (int c = 0; c < m; ++c) std::swap(b[piv * m + c], b[col * m + c]);
      det = -det;
    }
    const T p = a[col * n + col];
    det = det * p;
    const T inv = reciprocal_of(p);
    for (int c = col; c < n; ++c) a[col * n + c] = a[col * n + c] * inv;
    for (int c = 0; c < m; ++c) b[col * m + c] = b[col * m + c] * inv;
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const T f = a[r * n + col];
      if (is_exact_zero(f)) continue;
      for (int c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
      for (int c = 0; c < m; ++c) b[r * m + c] -= f * b[col * m + c];
    }
  }
  return det;
}

template <class T>
struct InverseResult {
  forms::Matrix4<T> inverse;
  T det;
};

template <class T>
InverseResult<T> invert4(const forms::Matrix4<T>& mat, double pivot_floor = 0.0) {
  std::vector<T> a(16);
  std::vector<T> b(16, T(0.0));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) a[i * 4 + j] = mat[i][j];
    b[i * 4 + i] = T(1.0);
  }
  const T det = gauss_jordan(a, b, 4, 4, pivot_floor);
  InverseResult<T> out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out.inverse[i][j] = b[i * 4 + j];
  }
  out.det = det;
  return out;
}

}  // namespace ecsk::geometry
