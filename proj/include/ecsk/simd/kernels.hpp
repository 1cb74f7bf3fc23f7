#pragma once
// Data-parallel kernels behind jet arithmetic.
//
// Every kernel has a scalar reference implementation; vector variants
// (AVX2 on x86-64, NEON on aarch64) are selected at runtime and must produce
// values identical to the scalar path. No kernel uses fused multiply-add, so
// rounding matches operation for operation.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace ecsk::simd {

// Truncated product of two multivariate Taylor polynomials, laid out as a
// gather table: output coefficient `row` receives
//   sum_k lhs_coeff[lhs[k][row]] * rhs_coeff[rhs[k][row]]
// for k < terms[row]. Unused slots point at `kZeroSlot`, which every operand
// keeps at 0.0.
struct ProductTable {
  static constexpr int kRows = 36;
  static constexpr int kMaxTerms = 8;
  static constexpr int kZeroSlot = 35;

  alignas(32) std::int32_t lhs[kMaxTerms][kRows];
  alignas(32) std::int32_t rhs[kMaxTerms][kRows];
  std::array<int, kRows> terms;
};

struct KernelTable {
  std::string_view name;
  // out[i] = a[i] + b[i]
  void (*add)(double* out, const double* a, const double* b, std::size_t n);
  // out[i] = a[i] - b[i]
  void (*sub)(double* out, const double* a, const double* b, std::size_t n);
  // out[i] = s * a[i]
  void (*scale)(double* out, const double* a, double s, std::size_t n);
  // y[i] += s * x[i]
  void (*axpy)(double* y, double s, const double* x, std::size_t n);
  // out[row] += (a * b)[row] for row < rows; `depth` is the largest term
  // count among those rows.
  void (*taylor_mul_acc)(double* out, const double* a, const double* b,
                         const ProductTable& table, int rows, int depth);
};

enum class Backend { Auto, Scalar, Avx2, Neon };

const KernelTable& scalar_kernels();
// nullptr when the variant was not compiled in or the CPU lacks support.
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

// Kernels used by the library. Chosen on first use: the best supported
// variant, unless ECSK_SIMD=scalar|avx2|neon is set in the environment.
const KernelTable& active();

// Overrides the runtime choice; returns false if the backend is unavailable.
bool select_backend(Backend backend);

}  // namespace ecsk::simd
