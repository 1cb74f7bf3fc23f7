#include "ecsk/exprkit/monomials.hpp"

#include <algorithm>
#include <stdexcept>

namespace ecsk::exprkit {
namespace {

int encode(const Exponent& e) { return e[0] + 4 * e[1] + 16 * e[2] + 64 * e[3]; }

struct Tables {
  std::array<Exponent, kMonomials> basis{};
  std::array<int, 256> lookup{};
  std::array<int, kMonomials> degree{};
  std::array<double, kMonomials> factorial{};
  std::array<std::array<int, kVars>, kMonomials> raise{};
  simd::ProductTable product{};

  Tables() {
    int n = 0;
    for (int d = 0; d <= kMaxOrder; ++d) {
      // Lexicographic with the first variable's exponent descending.
      for (int a = d; a >= 0; --a) {
        for (int b = d - a; b >= 0; --b) {
          for (int c = d - a - b; c >= 0; --c) {
            basis[n] = {a, b, c, d - a - b - c};
            degree[n] = d;
            ++n;
          }
        }
      }
    }
    if (n != kMonomials) throw std::logic_error("monomial basis size mismatch");

    lookup.fill(-1);
    for (int i = 0; i < kMonomials; ++i) lookup[encode(basis[i])] = i;

    static constexpr double fact[] = {1.0, 1.0, 2.0, 6.0};
    for (int i = 0; i < kMonomials; ++i) {
      factorial[i] = fact[basis[i][0]] * fact[basis[i][1]] * fact[basis[i][2]] * fact[basis[i][3]];
      for (int mu = 0; mu < kVars; ++mu) {
        Exponent up = basis[i];
        ++up[mu];
        const int total = up[0] + up[1] + up[2] + up[3];
        raise[i][mu] = total > kMaxOrder ? -1 : lookup[encode(up)];
      }
    }

    for (int k = 0; k < simd::ProductTable::kMaxTerms; ++k) {
      std::fill(std::begin(product.lhs[k]), std::end(product.lhs[k]), simd::ProductTable::kZeroSlot);
      std::fill(std::begin(product.rhs[k]), std::end(product.rhs[k]), simd::ProductTable::kZeroSlot);
    }
    product.terms.fill(0);
    for (int row = 0; row < kMonomials; ++row) {
      const Exponent& g = basis[row];
      int t = 0;
      for (int i = 0; i < kMonomials; ++i) {
        const Exponent& a = basis[i];
        if (a[0] > g[0] || a[1] > g[1] || a[2] > g[2] || a[3] > g[3]) continue;
        const Exponent b{g[0] - a[0], g[1] - a[1], g[2] - a[2], g[3] - a[3]};
        product.lhs[t][row] = i;
        product.rhs[t][row] = lookup[encode(b)];
        ++t;
      }
      product.terms[row] = t;
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

const std::array<Exponent, kMonomials>& basis() { return tables().basis; }

int monomial_index(const Exponent& e) {
  for (int v : e) {
    if (v < 0 || v > kMaxOrder) return -1;
  }
  if (e[0] + e[1] + e[2] + e[3] > kMaxOrder) return -1;
  return tables().lookup[encode(e)];
}

int degree(int index) { return tables().degree[index]; }

double exponent_factorial(int index) { return tables().factorial[index]; }

int raise_index(int index, int mu) { return tables().raise[index][mu]; }

const simd::ProductTable& product_table() { return tables().product; }

}  // namespace ecsk::exprkit
