#pragma once
// Palatini-Cartan action density and the ECSK field equations, in form and
// in component language.

#include "ecsk/fieldeqs/matter.hpp"

namespace ecsk::fieldeqs {

using forms::MixedForm;

// Coefficient of dx^0 ^ dx^1 ^ dx^2 ^ dx^3 in
// 1/2 eps_abcd e^a ^ e^b ^ F^cd + (Lambda/4!) eps_abcd e^a ^ e^b ^ e^c ^ e^d.
Jet pc_action_density(const MixedForm<Jet>& e, const MixedForm<Jet>& F, double lambda);

// Factors relating the form-level left-hand sides to the component tensors:
//   dual(eps_abcd e^b ^ F^cd)_a^mu      = c_T det e ebar^k_a G_k^mu
//   dual(eps_abcd Q~^c ^ e^d)_ab^mu     = c_Q det e ebar^k_a ebar^l_b M(Q)_kl^mu
// with dual(J)^mu = (1/3!) eps~^{mu abc} J_abc over the plain symbol and M the
// trace completion, and pc_action_density = c_action R det e. Measured once
// on a fixed random configuration.
struct CorrespondenceConstants {
  double c_T = 0.0;
  double c_Q = 0.0;
  double c_action = 0.0;
};
const CorrespondenceConstants& correspondence_constants();

// j^mu -> 3-form eps~_{mu abc} j^mu, and back.
MixedForm<Jet> dual_inverse(const Tensor<Jet>& density, forms::Variance variance, int internal_rank);
Tensor<Jet> dual(const MixedForm<Jet>& three_form);

// det e ebar^k_a t_{k l} g^{l mu}, for a rank-2 covariant t.
Tensor<Jet> frame_density_vector(const PointGeometry& pg, const Tensor<Jet>& t);
// det e ebar^k_a ebar^l_b s_{k l}^mu.
Tensor<Jet> frame_density_spin(const PointGeometry& pg, const Tensor<Jet>& s);

// Form-level sources T_a (3-form, lower a) and Sigma_ab (3-form, lower ab).
struct FormMatter {
  MixedForm<Jet> T;
  MixedForm<Jet> Sigma;
};
FormMatter form_matter(const PointGeometry& pg, const MatterFields& matter, double kappa);

// eps_abcd e^b ^ F^cd + (Lambda/3!) eps_abcd e^b ^ e^c ^ e^d - kappa T_a.
MixedForm<Jet> curvature_equation_residual(const PointGeometry& pg, const FormMatter& matter, double kappa,
                                           double lambda);

struct TorsionEquation {
  MixedForm<Jet> lhs_derivative;  // 1/2 eps_abcd d_w(e^c ^ e^d)
  MixedForm<Jet> lhs_torsion;     // eps_abcd Q~^c ^ e^d
  MixedForm<Jet> leibniz;         // their difference
  MixedForm<Jet> residual;        // lhs_derivative - kappa Sigma_ab
};
TorsionEquation torsion_equation(const PointGeometry& pg, const FormMatter& matter, double kappa);

struct ComponentResiduals {
  Tensor<Jet> dG;  // G - 8 pi T
  Tensor<Jet> dQ;  // Q + 16 pi Sigma
};
ComponentResiduals component_field_equation_residuals(const PointGeometry& pg, const MatterFields& matter);

}  // namespace ecsk::fieldeqs
