#include "ecsk/exprkit/finite_difference.hpp"

#include <cmath>
#include <vector>

namespace ecsk::exprkit {

Jet finite_difference_oracle(const Expression& expr, const Point& x, int order, double step) {
  if (order < 0 || order > kMaxOrder) throw JetOrderError("jet order must lie in [0, 3]");
  if (!(step > 0.0)) throw DomainError("finite-difference step must be positive", "");

  std::vector<double> coeffs(row_count(order), 0.0);
  for (int i = 0; i < row_count(order); ++i) {
    const int k = degree(i);
    if (k == 0) {
      coeffs[i] = eval_value(expr, x);
      continue;
    }
    const double h = step * std::pow(10.0, k - 1);
    const Exponent& alpha = basis()[i];
    std::vector<int> mus;
    for (int mu = 0; mu < kVars; ++mu) {
      for (int r = 0; r < alpha[mu]; ++r) mus.push_back(mu);
    }
    // Product of k central differences: sum over sign patterns.
    double sum = 0.0;
    for (int signs = 0; signs < (1 << k); ++signs) {
      Point y = x;
      double weight = 1.0;
      for (int j = 0; j < k; ++j) {
        const double s = (signs >> j) & 1 ? -1.0 : 1.0;
        y[mus[j]] += s * h;
        weight *= s;
      }
      if (!expr.chart().contains(y)) {
        throw DomainError("finite-difference stencil point " + format_point(y) + " leaves the chart domain", "");
      }
      sum += weight * eval_value(expr, y);
    }
    coeffs[i] = sum / std::pow(2.0 * h, k) / exponent_factorial(i);
  }
  return Jet::from_coefficients(coeffs, order);
}

}  // namespace ecsk::exprkit
