#include "ecsk/geometry/fields.hpp"

#include <cmath>

namespace ecsk::geometry {

int pair_index(int a, int b) {
  if (a == b) return -1;
  if (a > b) std::swap(a, b);
  for (int i = 0; i < 6; ++i) {
    if (kPairs[i][0] == a && kPairs[i][1] == b) return i;
  }
  return -1;
}

TetradField::TetradField(Components components) : c_(std::move(components)) {
  if (c_.size() != 16) throw GeometryError("a tetrad needs 16 components");
  for (const auto& e : c_) {
    if (!(e.chart() == chart())) throw GeometryError("tetrad components use different charts");
  }
}

MixedForm<Jet> TetradField::evaluate(const Point& x, int order) const {
  MixedForm<Jet> e(1, 1);
  for (int a = 0; a < 4; ++a) {
    for (int mu = 0; mu < 4; ++mu) e.at(a, mu) = exprkit::eval_jet(c_[a * 4 + mu], x, order);
  }
  return e;
}

FormEvaluator TetradField::evaluator() const {
  return [field = *this](const Point& x, int order) { return field.evaluate(x, order); };
}

SpinConnectionField::SpinConnectionField(Components components) : c_(std::move(components)) {
  if (c_.size() != 24) throw GeometryError("a spin connection needs 24 components");
  for (const auto& e : c_) {
    if (!(e.chart() == chart())) throw GeometryError("connection components use different charts");
  }
}

SpinConnectionField SpinConnectionField::zero(const Chart& chart) {
  return SpinConnectionField(Components(24, Expression::constant(0.0, chart)));
}

MixedForm<Jet> SpinConnectionField::evaluate(const Point& x, int order) const {
  MixedForm<Jet> w(1, 2);
  for (int p = 0; p < 6; ++p) {
    const int a = kPairs[p][0];
    const int b = kPairs[p][1];
    for (int mu = 0; mu < 4; ++mu) w.at(a * 4 + b, mu) = exprkit::eval_jet(c_[p * 4 + mu], x, order);
  }
  w.fill_images();
  return w;
}

FormEvaluator SpinConnectionField::evaluator() const {
  return [field = *this](const Point& x, int order) { return field.evaluate(x, order); };
}

MixedForm<Jet> apply_contorsion(const MixedForm<Jet>& omega, const MixedForm<Jet>& contorsion) {
  if (contorsion.degree() != 1 || contorsion.rank() != 2 || contorsion.variance() != forms::Variance::Upper) {
    throw GeometryError("contorsion must be a 1-form with two upper internal indices");
  }
  for (int a = 0; a < 4; ++a) {
    for (int b = a; b < 4; ++b) {
      for (int mu = 0; mu < 4; ++mu) {
        const double ab = contorsion.at(a * 4 + b, mu).value();
        const double ba = contorsion.at(b * 4 + a, mu).value();
        if (ab != -ba) throw GeometryError("contorsion is not antisymmetric in its internal pair");
      }
    }
  }
  MixedForm<Jet> out = omega + contorsion;
  out.set_internal_antisymmetric(true);
  return out;
}

FormEvaluator apply_contorsion(FormEvaluator base, FormEvaluator contorsion) {
  return [base = std::move(base), k = std::move(contorsion)](const Point& x, int order) {
    return apply_contorsion(base(x, order), k(x, order));
  };
}

}  // namespace ecsk::geometry
