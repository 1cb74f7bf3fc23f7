#pragma once
// Tetrad and spin-connection fields built from expressions, and the
// point-evaluator interface the rest of the pipeline consumes.

#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecsk/exprkit/expression.hpp"
#include "ecsk/forms/forms.hpp"

namespace ecsk::geometry {

using exprkit::Chart;
using exprkit::Expression;
using exprkit::Jet;
using exprkit::Point;
using forms::MixedForm;

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularTetradError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

// Jets of a form-valued field at a point, to the requested order.
using FormEvaluator = std::function<MixedForm<Jet>(const Point& x, int order)>;

// Index pairs a < b in the order (01, 02, 03, 12, 13, 23).
inline constexpr std::array<std::array<int, 2>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// -1 when a == b; otherwise the slot of {min, max} in kPairs.
int pair_index(int a, int b);

// e^a_mu, one expression per entry.
class TetradField {
 public:
  // Row-major: entry a * 4 + mu.
  using Components = std::vector<Expression>;

  explicit TetradField(Components components);

  const Expression& component(int a, int mu) const { return c_[a * 4 + mu]; }
  const Chart& chart() const { return c_[0].chart(); }

  // 1-form with one upper internal index.
  MixedForm<Jet> evaluate(const Point& x, int order) const;
  FormEvaluator evaluator() const;

 private:
  Components c_;
};

// w^{ab}_mu for a < b; the a > b entries follow by antisymmetry. Also used
// for contorsion fields, which have the same shape.
class SpinConnectionField {
 public:
  // Entry pair * 4 + mu, pairs ordered as in kPairs.
  using Components = std::vector<Expression>;

  explicit SpinConnectionField(Components components);
  static SpinConnectionField zero(const Chart& chart);

  const Expression& component(int pair, int mu) const { return c_[pair * 4 + mu]; }
  const Chart& chart() const { return c_[0].chart(); }

  // 1-form with two upper, antisymmetric internal indices.
  MixedForm<Jet> evaluate(const Point& x, int order) const;
  FormEvaluator evaluator() const;

 private:
  Components c_;
};

// w + K pointwise. K must be antisymmetric in its internal pair.
MixedForm<Jet> apply_contorsion(const MixedForm<Jet>& omega, const MixedForm<Jet>& contorsion);
FormEvaluator apply_contorsion(FormEvaluator base, FormEvaluator contorsion);

}  // namespace ecsk::geometry
