#include <cmath>

#include "ecsk/exprkit/expression.hpp"

namespace ecsk::exprkit {
namespace {

[[noreturn]] void domain_fail(const std::string& what, const Node& n) {
  throw DomainError(what, print_node(n));
}

void require_finite(const Jet& j, const Node& n) {
  for (int i = 0; i < row_count(j.order()); ++i) {
    if (!std::isfinite(j.coeff(i))) domain_fail("non-finite value", n);
  }
}

Jet jet_of(const Node& n, const Point& x, int order) {
  switch (n.op) {
    case Op::Constant: return Jet(n.value).truncated(order);
    case Op::Parameter: return Jet(n.value).truncated(order);
    case Op::Coordinate: return Jet::variable(n.index, x[n.index], order);
    case Op::Neg: return -jet_of(*n.args[0], x, order);
    case Op::Add: return jet_of(*n.args[0], x, order) + jet_of(*n.args[1], x, order);
    case Op::Sub: return jet_of(*n.args[0], x, order) - jet_of(*n.args[1], x, order);
    case Op::Mul: return jet_of(*n.args[0], x, order) * jet_of(*n.args[1], x, order);
    case Op::Div: {
      const Jet num = jet_of(*n.args[0], x, order);
      const Jet den = jet_of(*n.args[1], x, order);
      if (den.value() == 0.0) domain_fail("division by zero", n);
      Jet r = num / den;
      require_finite(r, n);
      return r;
    }
    case Op::IntPow: {
      const Jet base = jet_of(*n.args[0], x, order);
      if (n.int_exponent < 0 && base.value() == 0.0) domain_fail("division by zero", n);
      Jet r = pow(base, n.int_exponent);
      require_finite(r, n);
      return r;
    }
    case Op::RealPow: {
      const Jet base = jet_of(*n.args[0], x, order);
      if (!(base.value() > 0.0)) domain_fail("real power of a non-positive base", n);
      const Node& e = *n.args[1];
      Jet r;
      if (e.op == Op::Constant || e.op == Op::Parameter) {
        r = pow(base, e.value);
      } else {
        r = exp(jet_of(e, x, order) * log(base));
      }
      require_finite(r, n);
      return r;
    }
    case Op::Sin: return sin(jet_of(*n.args[0], x, order));
    case Op::Cos: return cos(jet_of(*n.args[0], x, order));
    case Op::Tan: {
      Jet r = tan(jet_of(*n.args[0], x, order));
      require_finite(r, n);
      return r;
    }
    case Op::Exp: {
      Jet r = exp(jet_of(*n.args[0], x, order));
      require_finite(r, n);
      return r;
    }
    case Op::Log: {
      const Jet u = jet_of(*n.args[0], x, order);
      if (!(u.value() > 0.0)) domain_fail("logarithm of a non-positive value", n);
      return log(u);
    }
    case Op::Sqrt: {
      const Jet u = jet_of(*n.args[0], x, order);
      if (u.value() < 0.0) domain_fail("square root of a negative value", n);
      if (u.value() == 0.0 && order > 0) domain_fail("square root is not differentiable at zero", n);
      return sqrt(u);
    }
  }
  domain_fail("unknown node", n);
}

double value_of(const Node& n, const Point& x) {
  switch (n.op) {
    case Op::Constant:
    case Op::Parameter: return n.value;
    case Op::Coordinate: return x[n.index];
    case Op::Neg: return -value_of(*n.args[0], x);
    case Op::Add: return value_of(*n.args[0], x) + value_of(*n.args[1], x);
    case Op::Sub: return value_of(*n.args[0], x) - value_of(*n.args[1], x);
    case Op::Mul: return value_of(*n.args[0], x) * value_of(*n.args[1], x);
    case Op::Div: {
      const double den = value_of(*n.args[1], x);
      if (den == 0.0) domain_fail("division by zero", n);
      return value_of(*n.args[0], x) / den;
    }
    case Op::IntPow: {
      const double b = value_of(*n.args[0], x);
      const int k = n.int_exponent < 0 ? -n.int_exponent : n.int_exponent;
      if (n.int_exponent < 0 && b == 0.0) domain_fail("division by zero", n);
      double r = 1.0;
      for (int i = 0; i < k; ++i) r *= b;
      return n.int_exponent < 0 ? 1.0 / r : r;
    }
    case Op::RealPow: {
      const double b = value_of(*n.args[0], x);
      if (!(b > 0.0)) domain_fail("real power of a non-positive base", n);
      return std::pow(b, value_of(*n.args[1], x));
    }
    case Op::Sin: return std::sin(value_of(*n.args[0], x));
    case Op::Cos: return std::cos(value_of(*n.args[0], x));
    case Op::Tan: return std::tan(value_of(*n.args[0], x));
    case Op::Exp: return std::exp(value_of(*n.args[0], x));
    case Op::Log: {
      const double u = value_of(*n.args[0], x);
      if (!(u > 0.0)) domain_fail("logarithm of a non-positive value", n);
      return std::log(u);
    }
    case Op::Sqrt: {
      const double u = value_of(*n.args[0], x);
      if (u < 0.0) domain_fail("square root of a negative value", n);
      return std::sqrt(u);
    }
  }
  domain_fail("unknown node", n);
}

void require_in_chart(const Expression& expr, const Point& x) {
  if (!expr.chart().contains(x)) throw DomainError("point " + format_point(x) + " outside the chart domain", "");
}

}  // namespace

Jet eval_jet(const Expression& expr, const Point& x, int order) {
  if (order < 0 || order > kMaxOrder) throw JetOrderError("jet order must lie in [0, 3]");
  require_in_chart(expr, x);
  Jet r = jet_of(expr.root(), x, order);
  require_finite(r, expr.root());
  return r;
}

double eval_value(const Expression& expr, const Point& x) {
  require_in_chart(expr, x);
  const double v = value_of(expr.root(), x);
  if (!std::isfinite(v)) domain_fail("non-finite value", expr.root());
  return v;
}

}  // namespace ecsk::exprkit
