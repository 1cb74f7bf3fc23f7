#pragma once
// Metric, connection, curvature and torsion quantities at one point, all as
// jets so that their own derivatives stay available downstream.
//
// Index conventions: Gamma(sigma, mu, nu) = Gamma^sigma_{mu nu} with mu the
// derivative index; riemann(mu, nu, w, sigma) = R_{mu nu w}^sigma;
// Q(mu, nu, sigma) = Q_{mu nu}^sigma; ebar[mu][a] is the inverse tetrad.

#include "ecsk/forms/tensor.hpp"
#include "ecsk/geometry/fields.hpp"

namespace ecsk::geometry {

using forms::Matrix4;
using forms::Tensor;

inline constexpr double kDefaultDetFloor = 1e-10;

struct MetricData {
  Matrix4<Jet> g;
  Matrix4<Jet> g_inv;
  Jet det_e;
};

// g_{mu nu} = eta_{ab} e^a_mu e^b_nu, its inverse, and det(e^a_mu) with sign.
MetricData metric_from_tetrad(const MixedForm<Jet>& e, double det_floor = kDefaultDetFloor);

// ebar[mu][a] with ebar^mu_a e^a_nu = delta^mu_nu.
Matrix4<Jet> inverse_tetrad(const MixedForm<Jet>& e, double det_floor = kDefaultDetFloor);

// (D_w alpha)_{mu nu..}: the partial derivative plus one connection term per
// internal index, with an extra, non-antisymmetrized slot mu. Slots of the
// result: the internal indices, then mu, then alpha's form indices.
Tensor<Jet> covariant_D(const MixedForm<Jet>& omega, const MixedForm<Jet>& alpha);

// Gamma^sigma_{mu nu} = ebar^sigma_a (d_mu e^a_nu + w^{ab}_mu eta_{bc} e^c_nu).
Tensor<Jet> christoffel(const MixedForm<Jet>& e, const MixedForm<Jet>& omega, const Matrix4<Jet>& ebar);
Tensor<Jet> christoffel(const MixedForm<Jet>& e, const MixedForm<Jet>& omega);

// F = d w + w ^ w (internal contraction through eta).
MixedForm<Jet> curvature_field_strength(const MixedForm<Jet>& omega);

struct CurvatureTensors {
  Tensor<Jet> riemann;  // R_{mu nu w}^sigma
  Tensor<Jet> ricci;    // R_{mu w} = R_{mu sigma w}^sigma
  Jet scalar;           // g^{mu w} R_{mu w}
  Jet scalar_frame;     // -ebar^mu_a ebar^w_b F^{ab}_{mu w}
  Tensor<Jet> einstein; // R_{mu nu} - g_{mu nu} R / 2
};

CurvatureTensors curvature_tensors(const MixedForm<Jet>& e, const MixedForm<Jet>& F, const Matrix4<Jet>& ebar,
                                   const MetricData& metric);
CurvatureTensors curvature_tensors(const MixedForm<Jet>& e, const MixedForm<Jet>& omega);

struct TorsionData {
  MixedForm<Jet> theta;  // d_w e
  Tensor<Jet> Q;         // Q_{mu nu}^sigma = ebar^sigma_a theta^a_{mu nu}
};

TorsionData torsion(const MixedForm<Jet>& e, const MixedForm<Jet>& omega, const Matrix4<Jet>& ebar);
TorsionData torsion(const MixedForm<Jet>& e, const MixedForm<Jet>& omega);

// Q from the antisymmetric part of Gamma, for cross-checks.
Tensor<Jet> torsion_from_christoffel(const Tensor<Jet>& gamma);

struct PointGeometry {
  Point x{};
  MixedForm<Jet> e;
  MixedForm<Jet> omega;
  MetricData metric;
  Matrix4<Jet> ebar;
  Tensor<Jet> gamma;
  MixedForm<Jet> F;
  CurvatureTensors curvature;
  TorsionData torsion;
};

PointGeometry compute_point_geometry(const Point& x, MixedForm<Jet> e, MixedForm<Jet> omega,
                                     double det_floor = kDefaultDetFloor);

// Evaluates e and w at x with enough jet order that every derived quantity
// (F, Gamma, Theta, curvature) carries `depth` derivatives.
PointGeometry evaluate_geometry(const FormEvaluator& tetrad, const FormEvaluator& connection, const Point& x,
                                int depth, double det_floor = kDefaultDetFloor);

}  // namespace ecsk::geometry
