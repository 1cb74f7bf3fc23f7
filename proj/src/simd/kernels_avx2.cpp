// AVX2 jet kernels. Compiled with -mavx2; only reached after a runtime
// cpuid check in dispatch.cpp.

#include <immintrin.h>

#include "ecsk/simd/kernels.hpp"

namespace ecsk::simd {
namespace {

void add_avx2(double* out, const double* a, const double* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  for (; i < n; ++i) out[i] = a[i] + b[i];
}

void sub_avx2(double* out, const double* a, const double* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  for (; i < n; ++i) out[i] = a[i] - b[i];
}

void scale_avx2(double* out, const double* a, double s, std::size_t n) {
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_mul_pd(vs, _mm256_loadu_pd(a + i)));
  }
  for (; i < n; ++i) out[i] = s * a[i];
}

void axpy_avx2(double* y, double s, const double* x, std::size_t n) {
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d prod = _mm256_mul_pd(vs, _mm256_loadu_pd(x + i));
    _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), prod));
  }
  for (; i < n; ++i) y[i] = y[i] + s * x[i];
}

// Lanes run over output rows; the term loop is outermost so each row still
// accumulates its products in table order, exactly like the scalar kernel.
// Rows shorter than `depth` gather the zero slot and add +0.0.
void taylor_mul_acc_avx2(double* out, const double* a, const double* b,
                         const ProductTable& t, int rows, int depth) {
  for (int row = 0; row < rows; row += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (int k = 0; k < depth; ++k) {
      const __m128i ia = _mm_load_si128(reinterpret_cast<const __m128i*>(&t.lhs[k][row]));
      const __m128i ib = _mm_load_si128(reinterpret_cast<const __m128i*>(&t.rhs[k][row]));
      const __m256d va = _mm256_i32gather_pd(a, ia, 8);
      const __m256d vb = _mm256_i32gather_pd(b, ib, 8);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(va, vb));
    }
    const int live = rows - row;
    if (live >= 4) {
      _mm256_storeu_pd(out + row, _mm256_add_pd(_mm256_loadu_pd(out + row), acc));
    } else {
      alignas(32) double lanes[4];
      _mm256_store_pd(lanes, acc);
      for (int l = 0; l < live; ++l) out[row + l] = out[row + l] + lanes[l];
    }
  }
}

}  // namespace

const KernelTable& avx2_kernel_table() {
  static const KernelTable table{"avx2",     add_avx2,  sub_avx2,
                                 scale_avx2, axpy_avx2, taylor_mul_acc_avx2};
  return table;
}

}  // namespace ecsk::simd
