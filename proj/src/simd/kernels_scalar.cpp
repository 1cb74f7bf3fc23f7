#include "ecsk/simd/kernels.hpp"

namespace ecsk::simd {
namespace {

void add_scalar(double* out, const double* a, const double* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
}

void sub_scalar(double* out, const double* a, const double* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
}

void scale_scalar(double* out, const double* a, double s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = s * a[i];
}

void axpy_scalar(double* y, double s, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = y[i] + s * x[i];
}

void taylor_mul_acc_scalar(double* out, const double* a, const double* b,
                           const ProductTable& t, int rows, int /*depth*/) {
  for (int row = 0; row < rows; ++row) {
    double sum = 0.0;
    for (int k = 0; k < t.terms[row]; ++k) {
      sum = sum + a[t.lhs[k][row]] * b[t.rhs[k][row]];
    }
    out[row] = out[row] + sum;
  }
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar",      add_scalar,  sub_scalar,
                                 scale_scalar,  axpy_scalar, taylor_mul_acc_scalar};
  return table;
}

}  // namespace ecsk::simd
