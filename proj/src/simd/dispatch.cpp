#include <atomic>
#include <cstdlib>
#include <string_view>

#include "ecsk/simd/kernels.hpp"

namespace ecsk::simd {

#if defined(ECSK_HAVE_AVX2)
const KernelTable& avx2_kernel_table();
#endif
#if defined(ECSK_HAVE_NEON)
const KernelTable& neon_kernel_table();
#endif

const KernelTable* avx2_kernels() {
#if defined(ECSK_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &avx2_kernel_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable* neon_kernels() {
#if defined(ECSK_HAVE_NEON)
  return &neon_kernel_table();
#else
  return nullptr;
#endif
}

namespace {

const KernelTable* best_available() {
  if (const auto* k = avx2_kernels()) return k;
  if (const auto* k = neon_kernels()) return k;
  return &scalar_kernels();
}

const KernelTable* initial_choice() {
  if (const char* env = std::getenv("ECSK_SIMD")) {
    const std::string_view want{env};
    if (want == "scalar") return &scalar_kernels();
    if (want == "avx2" && avx2_kernels()) return avx2_kernels();
    if (want == "neon" && neon_kernels()) return neon_kernels();
  }
  return best_available();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{initial_choice()};
  return table;
}

}  // namespace

const KernelTable& active() { return *current().load(std::memory_order_relaxed); }

bool select_backend(Backend backend) {
  const KernelTable* next = nullptr;
  switch (backend) {
    case Backend::Auto: next = best_available(); break;
    case Backend::Scalar: next = &scalar_kernels(); break;
    case Backend::Avx2: next = avx2_kernels(); break;
    case Backend::Neon: next = neon_kernels(); break;
  }
  if (next == nullptr) return false;
  current().store(next, std::memory_order_relaxed);
  return true;
}

}  // namespace ecsk::simd
