#include "ecsk/exprkit/jet.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ecsk::exprkit {

Jet Jet::variable(int mu, double x0, int order) {
  Jet j;
  j.order_ = order;
  j.c_[0] = x0;
  if (order >= 1) j.c_[1 + mu] = 1.0;
  return j;
}

Jet Jet::from_coefficients(std::span<const double> coeffs, int order) {
  Jet j;
  j.order_ = order;
  const auto n = std::min<std::size_t>(coeffs.size(), static_cast<std::size_t>(row_count(order)));
  std::copy_n(coeffs.begin(), n, j.c_.begin());
  return j;
}

double Jet::partial(std::span<const int> mus) const {
  const int k = static_cast<int>(mus.size());
  if (k > order_) {
    throw JetOrderError("partial of order " + std::to_string(k) + " requested from a jet of order " +
                        std::to_string(order_));
  }
  Exponent e{0, 0, 0, 0};
  for (int mu : mus) ++e[mu];
  const int idx = monomial_index(e);
  return c_[idx] * exponent_factorial(idx);
}

Jet Jet::derivative(int mu) const {
  if (order_ == 0) throw JetOrderError("derivative of an order-0 jet");
  Jet d;
  d.order_ = order_ - 1;
  const int n = row_count(d.order_);
  for (int i = 0; i < n; ++i) {
    const int up = raise_index(i, mu);
    d.c_[i] = static_cast<double>(basis()[i][mu] + 1) * c_[up];
  }
  return d;
}

Jet Jet::truncated(int order) const {
  if (order >= order_) return *this;
  Jet t;
  t.order_ = order;
  std::copy_n(c_.begin(), row_count(order), t.c_.begin());
  return t;
}

Jet Jet::operator-() const {
  Jet r;
  r.order_ = order_;
  simd::active().scale(r.c_.data(), c_.data(), -1.0, row_count(order_));
  return r;
}

Jet operator+(const Jet& a, const Jet& b) {
  Jet r;
  r.order_ = std::min(a.order_, b.order_);
  simd::active().add(r.c_.data(), a.c_.data(), b.c_.data(), row_count(r.order_));
  return r;
}

Jet operator-(const Jet& a, const Jet& b) {
  Jet r;
  r.order_ = std::min(a.order_, b.order_);
  simd::active().sub(r.c_.data(), a.c_.data(), b.c_.data(), row_count(r.order_));
  return r;
}

Jet operator*(double s, const Jet& a) {
  Jet r;
  r.order_ = a.order_;
  simd::active().scale(r.c_.data(), a.c_.data(), s, row_count(a.order_));
  return r;
}

Jet operator*(const Jet& a, const Jet& b) {
  Jet r;
  r.order_ = std::min(a.order_, b.order_);
  simd::active().taylor_mul_acc(r.c_.data(), a.c_.data(), b.c_.data(), product_table(),
                                row_count(r.order_), product_depth(r.order_));
  return r;
}

void axpy(Jet& y, double s, const Jet& x) {
  const int order = std::min(y.order_, x.order_);
  if (order < y.order_) y = y.truncated(order);
  simd::active().axpy(y.c_.data(), s, x.c_.data(), row_count(order));
}

void fma_into(Jet& y, const Jet& a, const Jet& b) {
  const int order = std::min({y.order_, a.order_, b.order_});
  if (order < y.order_) y = y.truncated(order);
  simd::active().taylor_mul_acc(y.c_.data(), a.c_.data(), b.c_.data(), product_table(),
                                row_count(order), product_depth(order));
}

Jet& Jet::operator+=(const Jet& o) { return *this = *this + o; }
Jet& Jet::operator-=(const Jet& o) { return *this = *this - o; }
Jet& Jet::operator*=(const Jet& o) { return *this = *this * o; }
Jet& Jet::operator*=(double s) { return *this = s * *this; }

Jet Jet::compose(const std::array<double, kMaxOrder + 1>& d) const {
  // Horner in h = u - u0, whose powers beyond the order vanish.
  Jet h = *this;
  h.c_[0] = 0.0;
  static constexpr double inv_fact[] = {1.0, 1.0, 0.5, 1.0 / 6.0};
  Jet r(d[order_] * inv_fact[order_]);
  r.order_ = order_;
  for (int k = order_ - 1; k >= 0; --k) {
    r = r * h;
    r.c_[0] = r.c_[0] + d[k] * inv_fact[k];
  }
  return r;
}

Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

Jet reciprocal(const Jet& u) {
  const double v = 1.0 / u.value();
  return u.compose({v, -v * v, 2.0 * v * v * v, -6.0 * v * v * v * v});
}

Jet sin(const Jet& u) {
  const double s = std::sin(u.value());
  const double c = std::cos(u.value());
  return u.compose({s, c, -s, -c});
}

Jet cos(const Jet& u) {
  const double s = std::sin(u.value());
  const double c = std::cos(u.value());
  return u.compose({c, -s, -c, s});
}

Jet tan(const Jet& u) {
  const double t = std::tan(u.value());
  const double sec2 = 1.0 + t * t;
  return u.compose({t, sec2, 2.0 * t * sec2, sec2 * (2.0 + 6.0 * t * t)});
}

Jet exp(const Jet& u) {
  const double e = std::exp(u.value());
  return u.compose({e, e, e, e});
}

Jet log(const Jet& u) {
  const double v = 1.0 / u.value();
  return u.compose({std::log(u.value()), v, -v * v, 2.0 * v * v * v});
}

Jet sqrt(const Jet& u) {
  const double s = std::sqrt(u.value());
  const double v = 1.0 / u.value();
  return u.compose({s, 0.5 * s * v, -0.25 * s * v * v, 0.375 * s * v * v * v});
}

Jet pow(const Jet& u, int n) {
  if (n < 0) return reciprocal(pow(u, -n));
  Jet r(1.0);
  for (int i = 0; i < n; ++i) r = r * u;
  if (n == 0) r = r.truncated(u.order());
  return r;
}

Jet pow(const Jet& u, double p) {
  const double x = u.value();
  const double f0 = std::pow(x, p);
  return u.compose({f0, p * f0 / x, p * (p - 1.0) * f0 / (x * x),
                    p * (p - 1.0) * (p - 2.0) * f0 / (x * x * x)});
}

double max_abs(const Jet& u) {
  double m = 0.0;
  for (int i = 0; i < row_count(u.order()); ++i) m = std::max(m, std::abs(u.coeff(i)));
  return m;
}

}  // namespace ecsk::exprkit
