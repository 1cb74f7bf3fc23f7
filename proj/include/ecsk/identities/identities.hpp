#pragma once
// Residuals of the structural identities: Bianchi identities, the rewritten
// field-equation left-hand sides, conservation laws, metric compatibility and
// d_w^2 = F ^.

#include "ecsk/fieldeqs/field_equations.hpp"

namespace ecsk::identities {

using exprkit::Jet;
using fieldeqs::FormMatter;
using fieldeqs::MatterFields;
using forms::MixedForm;
using forms::Tensor;
using geometry::PointGeometry;

// d_w F. The second overload takes F as given, so a corrupted F shows up.
MixedForm<Jet> second_bianchi_residual(const MixedForm<Jet>& omega);
MixedForm<Jet> second_bianchi_residual(const MixedForm<Jet>& omega, const MixedForm<Jet>& F);

// (F ^ e)^a = F^{ab} eta_bc ^ e^c.
MixedForm<Jet> curvature_wedge_frame(const MixedForm<Jet>& F, const MixedForm<Jet>& e);

// d_w Theta - F ^ e.
MixedForm<Jet> first_bianchi_residual(const PointGeometry& pg);

// i_a x = i_{ebar_a} x.
MixedForm<Jet> frame_interior(const PointGeometry& pg, const MixedForm<Jet>& x, int a);

struct RewrittenLhs {
  // d_w(eps_abcd e^b ^ F^cd) - i_a Q~^b ^ (eps_bcde e^c ^ F^de) - i_a F^bc ^ (eps_bcde Q~^d ^ e^e)
  MixedForm<Jet> curvature_line;
  // d_w(eps_abcd Q~^c ^ e^d) - 1/2 (X_ab - X_ba), X_ab = eps_acde e^c ^ F^de ^ e_b
  MixedForm<Jet> torsion_line;
  // The same with the opposite sign on the right-hand side; not an identity.
  MixedForm<Jet> torsion_line_opposite_sign;
};
RewrittenLhs rewritten_lhs_check(const PointGeometry& pg);

struct FormConservation {
  MixedForm<Jet> momentum;  // d_w T_a - i_a Q~^b ^ T_b - i_a F^bc ^ Sigma_bc
  MixedForm<Jet> spin;      // d_w Sigma_ab - 1/2 (T_a ^ e_b - T_b ^ e_a)
};
FormConservation conservation_form_residuals(const PointGeometry& pg, const FormMatter& matter);

// Component conservation laws, with nabla the Gamma connection on every slot.
struct ComponentConservation {
  // nabla_m T^{mn} + T_{sr} Q^{srn} - Sigma_{msr} R^{msrn}, each index of
  // Q, Sigma and R raised or lowered in place with g.
  Tensor<double> momentum;
  // nabla_m Sigma_{sw}^m + 1/2 (T_{sw} - T_{ws}).
  Tensor<double> spin;
  // nabla_m T_n^m + Q_{ml}^l T_n^m - Q_{nm}^k T_k^m + g^{lr} R_{nmr}^k M_{kl}^m,
  // M the trace completion of Sigma. Holds for any torsion.
  Tensor<double> momentum_general;
  // nabla_m M_{sw}^m + Q_{ml}^l M_{sw}^m - 1/2 (T_{sw} - T_{ws}).
  Tensor<double> spin_general;
};
ComponentConservation conservation_component_residuals(const PointGeometry& pg, const MatterFields& matter);

// nabla_l g_{mn} = d_l g_{mn} - Gamma^r_{lm} g_{rn} - Gamma^r_{ln} g_{mr}.
Tensor<double> metric_compatibility_residual(const PointGeometry& pg);

// F acting on each internal index of alpha: + F^a_c ^ alpha^{..c..} for an
// upper index, - F^c_a ^ alpha_{..c..} for a lower one.
MixedForm<Jet> curvature_action(const MixedForm<Jet>& F, const MixedForm<Jet>& alpha);

// d_w d_w alpha - F ^ alpha.
MixedForm<Jet> d_squared_residual(const MixedForm<Jet>& omega, const MixedForm<Jet>& alpha);

}  // namespace ecsk::identities
