#pragma once
// Truncated multivariate Taylor polynomial ("jet") in the four chart
// coordinates around a fixed point.
//
// Coefficient i is d^alpha f / alpha! for alpha = basis()[i]. A jet of order
// K carries every partial derivative up to K; combining jets of different
// order yields the smaller one. Constants carry order kMaxOrder.

#include <array>
#include <initializer_list>
#include <span>
#include <stdexcept>

#include "ecsk/exprkit/monomials.hpp"

namespace ecsk::exprkit {

class JetOrderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Jet {
 public:
  static constexpr int kSlots = simd::ProductTable::kRows;

  Jet() = default;
  Jet(double value) { c_[0] = value; }  // NOLINT: implicit constant lift

  static Jet variable(int mu, double x0, int order = kMaxOrder);
  static Jet from_coefficients(std::span<const double> coeffs, int order);

  int order() const { return order_; }
  double value() const { return c_[0]; }
  double coeff(int index) const { return c_[index]; }
  const double* data() const { return c_.data(); }

  // d^k f / dx^{mu_1} ... dx^{mu_k} at the expansion point; k <= order().
  double partial(std::span<const int> mus) const;
  double partial(std::initializer_list<int> mus) const {
    return partial(std::span<const int>(mus.begin(), mus.size()));
  }

  // Jet of d f / dx^mu, one order lower.
  Jet derivative(int mu) const;
  Jet truncated(int order) const;

  Jet operator-() const;
  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  Jet& operator*=(double s);

  friend Jet operator+(const Jet& a, const Jet& b);
  friend Jet operator-(const Jet& a, const Jet& b);
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator*(double s, const Jet& a);
  friend Jet operator*(const Jet& a, double s) { return s * a; }
  friend Jet operator/(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, double s) { return (1.0 / s) * a; }

  // y += s * x
  friend void axpy(Jet& y, double s, const Jet& x);
  // y += a * b
  friend void fma_into(Jet& y, const Jet& a, const Jet& b);

  // Same order and coefficients (bitwise equality of doubles).
  bool identical(const Jet& o) const { return order_ == o.order_ && c_ == o.c_; }

  // g(u) for a scalar function with derivatives d[k] = g^(k)(u0), k <= order.
  Jet compose(const std::array<double, kMaxOrder + 1>& d) const;

 private:
  alignas(32) std::array<double, kSlots> c_{};
  int order_ = kMaxOrder;
};

Jet reciprocal(const Jet& u);
Jet sin(const Jet& u);
Jet cos(const Jet& u);
Jet tan(const Jet& u);
Jet exp(const Jet& u);
Jet log(const Jet& u);
Jet sqrt(const Jet& u);
// Repeated multiplication; negative n goes through the reciprocal.
Jet pow(const Jet& u, int n);
Jet pow(const Jet& u, double p);

double max_abs(const Jet& u);

}  // namespace ecsk::exprkit
