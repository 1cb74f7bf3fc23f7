#include <doctest.h>

#include <random>
#include <vector>

#include "ecsk/exprkit/jet.hpp"
#include "ecsk/geometry/levi_civita.hpp"
#include "ecsk/simd/kernels.hpp"
#include "test_support.hpp"

using namespace ecsk;

namespace {

std::vector<const simd::KernelTable*> vector_backends() {
  std::vector<const simd::KernelTable*> out;
  if (auto* k = simd::avx2_kernels()) out.push_back(k);
  if (auto* k = simd::neon_kernels()) out.push_back(k);
  return out;
}

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::vector<double> v(n);
  for (auto& x : v) x = geometry::uniform(rng, -3.0, 3.0);
  return v;
}

// Operand padded to the full slot count, with the zero slot cleared.
std::vector<double> random_operand(std::mt19937_64& rng) {
  auto v = random_vector(rng, simd::ProductTable::kRows);
  v[simd::ProductTable::kZeroSlot] = 0.0;
  return v;
}

struct BackendGuard {
  ~BackendGuard() { simd::select_backend(simd::Backend::Auto); }
};

}  // namespace

TEST_SUITE("simd") {
  TEST_CASE("elementwise kernels agree bitwise with the scalar reference") {
    const auto& ref = simd::scalar_kernels();
    std::mt19937_64 rng(1);
    for (const auto* k : vector_backends()) {
      CAPTURE(k->name);
      for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 35u, 36u, 101u}) {
        const auto a = random_vector(rng, n);
        const auto b = random_vector(rng, n);
        std::vector<double> r1(n), r2(n);
        ref.add(r1.data(), a.data(), b.data(), n);
        k->add(r2.data(), a.data(), b.data(), n);
        CHECK(r1 == r2);
        ref.sub(r1.data(), a.data(), b.data(), n);
        k->sub(r2.data(), a.data(), b.data(), n);
        CHECK(r1 == r2);
        ref.scale(r1.data(), a.data(), 1.7, n);
        k->scale(r2.data(), a.data(), 1.7, n);
        CHECK(r1 == r2);
        r1 = b;
        r2 = b;
        ref.axpy(r1.data(), -0.3, a.data(), n);
        k->axpy(r2.data(), -0.3, a.data(), n);
        CHECK(r1 == r2);
      }
    }
  }

  TEST_CASE("truncated product kernel agrees bitwise at every order") {
    const auto& ref = simd::scalar_kernels();
    const auto& table = exprkit::product_table();
    std::mt19937_64 rng(2);
    for (const auto* k : vector_backends()) {
      for (int order = 0; order <= exprkit::kMaxOrder; ++order) {
        for (int trial = 0; trial < 50; ++trial) {
          const auto a = random_operand(rng);
          const auto b = random_operand(rng);
          auto acc = random_operand(rng);
          auto r1 = acc;
          auto r2 = acc;
          ref.taylor_mul_acc(r1.data(), a.data(), b.data(), table, exprkit::row_count(order),
                             exprkit::product_depth(order));
          k->taylor_mul_acc(r2.data(), a.data(), b.data(), table, exprkit::row_count(order),
                            exprkit::product_depth(order));
          CHECK(r1 == r2);
        }
      }
    }
  }

  TEST_CASE("selecting an unavailable backend is refused") {
    BackendGuard guard;
    CHECK(simd::select_backend(simd::Backend::Scalar));
    CHECK(simd::active().name == simd::scalar_kernels().name);
    if (!simd::avx2_kernels()) CHECK_FALSE(simd::select_backend(simd::Backend::Avx2));
    if (!simd::neon_kernels()) CHECK_FALSE(simd::select_backend(simd::Backend::Neon));
  }

  TEST_CASE("geometry pipeline is bitwise identical across backends") {
    BackendGuard guard;
    const auto chart = geometry::unit_box_chart();
    const auto e = geometry::random_tetrad(5, chart).evaluator();
    const auto w = geometry::random_connection(5, chart).evaluator();
    const auto lc = geometry::levi_civita_connection(e);
    const exprkit::Point x{0.2, -0.4, 0.1, 0.6};

    simd::select_backend(simd::Backend::Scalar);
    const auto ref = geometry::evaluate_geometry(e, w, x, 1);
    const auto ref_lc = geometry::evaluate_geometry(e, lc, x, 1);

    std::vector<simd::Backend> others;
    if (simd::avx2_kernels()) others.push_back(simd::Backend::Avx2);
    if (simd::neon_kernels()) others.push_back(simd::Backend::Neon);
    for (auto b : others) {
      REQUIRE(simd::select_backend(b));
      const auto pg = geometry::evaluate_geometry(e, w, x, 1);
      const auto pg_lc = geometry::evaluate_geometry(e, lc, x, 1);
      for (std::size_t i = 0; i < ref.F.data().size(); ++i) CHECK(ref.F.data()[i].identical(pg.F.data()[i]));
      for (std::size_t i = 0; i < ref.gamma.data().size(); ++i) {
        CHECK(ref.gamma.data()[i].identical(pg.gamma.data()[i]));
      }
      for (std::size_t i = 0; i < ref_lc.omega.data().size(); ++i) {
        CHECK(ref_lc.omega.data()[i].identical(pg_lc.omega.data()[i]));
      }
    }
  }
}
