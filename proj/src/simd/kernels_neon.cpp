// NEON jet kernels (aarch64). NEON is mandatory on aarch64, so no runtime
// probe is needed beyond the compile-time guard.

#include <arm_neon.h>

#include "ecsk/simd/kernels.hpp"

namespace ecsk::simd {
namespace {

void add_neon(double* out, const double* a, const double* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vaddq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  for (; i < n; ++i) out[i] = a[i] + b[i];
}

void sub_neon(double* out, const double* a, const double* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  for (; i < n; ++i) out[i] = a[i] - b[i];
}

void scale_neon(double* out, const double* a, double s, std::size_t n) {
  const float64x2_t vs = vdupq_n_f64(s);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vmulq_f64(vs, vld1q_f64(a + i)));
  for (; i < n; ++i) out[i] = s * a[i];
}

void axpy_neon(double* y, double s, const double* x, std::size_t n) {
  const float64x2_t vs = vdupq_n_f64(s);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    // vmulq + vaddq rather than vfmaq: keeps rounding identical to scalar.
    vst1q_f64(y + i, vaddq_f64(vld1q_f64(y + i), vmulq_f64(vs, vld1q_f64(x + i))));
  }
  for (; i < n; ++i) y[i] = y[i] + s * x[i];
}

void taylor_mul_acc_neon(double* out, const double* a, const double* b,
                         const ProductTable& t, int rows, int depth) {
  for (int row = 0; row < rows; row += 2) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (int k = 0; k < depth; ++k) {
      const double la[2] = {a[t.lhs[k][row]], a[t.lhs[k][row + 1]]};
      const double lb[2] = {b[t.rhs[k][row]], b[t.rhs[k][row + 1]]};
      acc = vaddq_f64(acc, vmulq_f64(vld1q_f64(la), vld1q_f64(lb)));
    }
    out[row] = out[row] + vgetq_lane_f64(acc, 0);
    if (row + 1 < rows) out[row + 1] = out[row + 1] + vgetq_lane_f64(acc, 1);
  }
}

}  // namespace

const KernelTable& neon_kernel_table() {
  static const KernelTable table{"neon",     add_neon,  sub_neon,
                                 scale_neon, axpy_neon, taylor_mul_acc_neon};
  return table;
}

}  // namespace ecsk::simd
