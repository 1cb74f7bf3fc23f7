#pragma once
// Graded monomial basis for truncated Taylor polynomials in four variables.
//
// Index i < 35 names the exponent vector basis()[i]; indices are grouped by
// total degree (1 of degree 0, then 4, 10, 20), so a polynomial of order K
// occupies exactly the first row_count(K) slots.

#include <array>

#include "ecsk/simd/kernels.hpp"

namespace ecsk::exprkit {

inline constexpr int kVars = 4;
inline constexpr int kMaxOrder = 3;
inline constexpr int kMonomials = 35;

using Exponent = std::array<int, kVars>;

const std::array<Exponent, kMonomials>& basis();

// Slot of an exponent vector, or -1 when its degree exceeds kMaxOrder.
int monomial_index(const Exponent& e);

int degree(int index);

// Number of slots holding a polynomial of order k (1, 5, 15, 35).
constexpr int row_count(int order) {
  constexpr int rows[] = {1, 5, 15, 35};
  return rows[order];
}

// Largest product-term count over the rows of order k (1, 2, 4, 8).
constexpr int product_depth(int order) {
  constexpr int depth[] = {1, 2, 4, 8};
  return depth[order];
}

// alpha! = prod_i alpha_i!
double exponent_factorial(int index);

// Slot of basis()[index] + e_mu, or -1 if that leaves the basis.
int raise_index(int index, int mu);

const simd::ProductTable& product_table();

}  // namespace ecsk::exprkit
