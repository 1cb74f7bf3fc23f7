#pragma once
// Finite local Lorentz transformations of (e, w).

#include <utility>
#include <vector>

#include "ecsk/forms/tensor.hpp"
#include "ecsk/geometry/fields.hpp"

namespace ecsk::geometry {

// Lambda^a_b(x) as a product of factors, each either a general matrix of
// expressions or an elementary rotation/boost with an expression parameter.
class LorentzField {
 public:
  static LorentzField from_matrix(std::vector<Expression> entries);  // row-major Lambda^a_b
  // Rotation by `angle` in the spatial plane (i, j), i, j in {0, 1, 2}.
  static LorentzField rotation(int i, int j, Expression angle);
  // Boost with `rapidity` along spatial axis i (time is index 3).
  static LorentzField boost(int i, Expression rapidity);

  // this * other
  LorentzField then(const LorentzField& other) const;

  forms::Matrix4<Jet> evaluate(const Point& x, int order) const;

 private:
  enum class Kind { Matrix, Rotation, Boost };
  struct Factor {
    Kind kind;
    int i = 0;
    int j = 0;
    std::vector<Expression> entries;  // Matrix: 16; otherwise the single parameter
  };
  std::vector<Factor> factors_;
};

// max |Lambda^T eta Lambda - eta| over entries.
double lorentz_defect(const forms::Matrix4<Jet>& lambda);

// e' = Lambda e and w' = Lambda w Lambda^{-1} - dLambda Lambda^{-1}, with
// Lambda^{-1} = eta Lambda^T eta. Throws GeometryError when Lambda is not
// eta-orthogonal to `tol`.
std::pair<MixedForm<Jet>, MixedForm<Jet>> lorentz_transform_at(const MixedForm<Jet>& e, const MixedForm<Jet>& omega,
                                                               const forms::Matrix4<Jet>& lambda, double tol = 1e-10);

std::pair<FormEvaluator, FormEvaluator> lorentz_transform(FormEvaluator tetrad, FormEvaluator connection,
                                                          LorentzField lambda, double tol = 1e-10);

// F' = Lambda F Lambda^{-1} on the internal pair.
MixedForm<Jet> transform_field_strength(const MixedForm<Jet>& F, const forms::Matrix4<Jet>& lambda);

}  // namespace ecsk::geometry
