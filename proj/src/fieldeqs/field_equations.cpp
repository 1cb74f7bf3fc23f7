#include "ecsk/fieldeqs/field_equations.hpp"

#include <numbers>

#include "ecsk/geometry/random_fields.hpp"

namespace ecsk::fieldeqs {

using forms::Slot;
using forms::Variance;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kVolume = 0 * 64 + 1 * 16 + 2 * 4 + 3;

MixedForm<Jet> eps_e_F(const PointGeometry& pg) {
  return forms::epsilon_contract(forms::tensor_wedge(pg.e, pg.F));
}

MixedForm<Jet> eps_theta_e(const PointGeometry& pg) {
  return forms::epsilon_contract(forms::tensor_wedge(pg.torsion.theta, pg.e));
}

double fit(const Tensor<Jet>& y, const Tensor<Jet>& x) {
  double xy = 0.0;
  double xx = 0.0;
  for (std::size_t i = 0; i < x.data().size(); ++i) {
    xy += x.data()[i].value() * y.data()[i].value();
    xx += x.data()[i].value() * x.data()[i].value();
  }
  return xy / xx;
}

CorrespondenceConstants measure() {
  const auto chart = geometry::unit_box_chart();
  constexpr std::uint64_t kSeed = 20240611;
  const auto tetrad = geometry::random_tetrad(kSeed, chart);
  const auto connection = geometry::random_connection(kSeed, chart);
  const auto pg = geometry::evaluate_geometry(tetrad.evaluator(), connection.evaluator(), {0.31, -0.17, 0.12, 0.43}, 0);
  CorrespondenceConstants c;
  c.c_T = fit(dual(eps_e_F(pg)), frame_density_vector(pg, pg.curvature.einstein));
  c.c_Q = fit(dual(eps_theta_e(pg)), frame_density_spin(pg, trace_completion(pg.torsion.Q)));
  c.c_action = pc_action_density(pg.e, pg.F, 0.0).value() / (pg.curvature.scalar.value() * pg.metric.det_e.value());
  return c;
}

}  // namespace

Jet pc_action_density(const MixedForm<Jet>& e, const MixedForm<Jet>& F, double lambda) {
  const auto ee = forms::tensor_wedge(e, e);
  Jet density = 0.5 * forms::epsilon_contract(forms::tensor_wedge(ee, F)).at(0, kVolume);
  if (lambda != 0.0) {
    const auto e4 = forms::tensor_wedge(ee, ee);
    density += (lambda / 24.0) * forms::epsilon_contract(e4).at(0, kVolume);
  }
  return density;
}

const CorrespondenceConstants& correspondence_constants() {
  static const CorrespondenceConstants c = measure();
  return c;
}

MixedForm<Jet> dual_inverse(const Tensor<Jet>& density, Variance variance, int internal_rank) {
  MixedForm<Jet> out(3, internal_rank, variance, true);
  const int stride = 4;
  for (int a : out.canonical_internal()) {
    for (int m : forms::sorted_tuples(3)) {
      const auto md = forms::unflatten(m, 3);
      Jet acc;
      for (int mu = 0; mu < 4; ++mu) {
        const int s = forms::epsilon(mu, md[0], md[1], md[2]);
        if (s != 0) forms::add_signed(acc, density.at(a * stride + mu), s);
      }
      out.at(a, m) = acc;
    }
  }
  out.fill_images();
  return out;
}

Tensor<Jet> dual(const MixedForm<Jet>& j) {
  if (j.degree() != 3) throw forms::FormError("dual needs a 3-form");
  const Slot internal = j.variance() == Variance::Upper ? Slot::InternalUpper : Slot::InternalLower;
  std::vector<Slot> slots(static_cast<std::size_t>(j.rank()), internal);
  slots.push_back(Slot::SpacetimeUpper);
  Tensor<Jet> out(slots);
  for (int a = 0; a < j.internal_size(); ++a) {
    for (int mu = 0; mu < 4; ++mu) {
      Jet acc;
      for (int m : forms::sorted_tuples(3)) {
        const auto md = forms::unflatten(m, 3);
        const int s = forms::epsilon(mu, md[0], md[1], md[2]);
        if (s != 0) forms::add_signed(acc, j.at(a, m), s);
      }
      out.at(a * 4 + mu) = acc;
    }
  }
  return out;
}

Tensor<Jet> frame_density_vector(const PointGeometry& pg, const Tensor<Jet>& t) {
  Tensor<Jet> mixed({Slot::SpacetimeLower, Slot::SpacetimeUpper});
  for (int k = 0; k < 4; ++k) {
    for (int mu = 0; mu < 4; ++mu) {
      Jet acc;
      for (int l = 0; l < 4; ++l) forms::mul_add(acc, t({k, l}), pg.metric.g_inv[l][mu]);
      mixed({k, mu}) = acc;
    }
  }
  Tensor<Jet> out({Slot::InternalLower, Slot::SpacetimeUpper});
  for (int a = 0; a < 4; ++a) {
    for (int mu = 0; mu < 4; ++mu) {
      Jet acc;
      for (int k = 0; k < 4; ++k) forms::mul_add(acc, pg.ebar[k][a], mixed({k, mu}));
      out({a, mu}) = pg.metric.det_e * acc;
    }
  }
  return out;
}

Tensor<Jet> frame_density_spin(const PointGeometry& pg, const Tensor<Jet>& s) {
  Tensor<Jet> half({Slot::InternalLower, Slot::SpacetimeLower, Slot::SpacetimeUpper});
  for (int a = 0; a < 4; ++a) {
    for (int l = 0; l < 4; ++l) {
      for (int mu = 0; mu < 4; ++mu) {
        Jet acc;
        for (int k = 0; k < 4; ++k) forms::mul_add(acc, pg.ebar[k][a], s({k, l, mu}));
        half({a, l, mu}) = acc;
      }
    }
  }
  Tensor<Jet> out({Slot::InternalLower, Slot::InternalLower, Slot::SpacetimeUpper});
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (int mu = 0; mu < 4; ++mu) {
        Jet acc;
        for (int l = 0; l < 4; ++l) forms::mul_add(acc, pg.ebar[l][b], half({a, l, mu}));
        out({a, b, mu}) = pg.metric.det_e * acc;
      }
    }
  }
  return out;
}

FormMatter form_matter(const PointGeometry& pg, const MatterFields& matter, double kappa) {
  const auto& c = correspondence_constants();
  FormMatter f;
  f.T = (c.c_T * 8.0 * kPi / kappa) * dual_inverse(frame_density_vector(pg, matter.T), Variance::Lower, 1);
  f.Sigma = (-c.c_Q * 16.0 * kPi / kappa) *
            dual_inverse(frame_density_spin(pg, trace_completion(matter.Sigma)), Variance::Lower, 2);
  return f;
}

MixedForm<Jet> curvature_equation_residual(const PointGeometry& pg, const FormMatter& matter, double kappa,
                                           double lambda) {
  MixedForm<Jet> r = eps_e_F(pg);
  if (lambda != 0.0) {
    const auto eee = forms::tensor_wedge(forms::tensor_wedge(pg.e, pg.e), pg.e);
    r += (lambda / 6.0) * forms::epsilon_contract(eee);
  }
  r -= kappa * matter.T;
  return r;
}

TorsionEquation torsion_equation(const PointGeometry& pg, const FormMatter& matter, double kappa) {
  TorsionEquation t;
  const auto ee = forms::tensor_wedge(pg.e, pg.e);
  t.lhs_derivative = 0.5 * forms::epsilon_contract(forms::covariant_exterior_derivative(pg.omega, ee));
  t.lhs_torsion = eps_theta_e(pg);
  t.leibniz = t.lhs_derivative - t.lhs_torsion;
  t.residual = t.lhs_derivative - kappa * matter.Sigma;
  return t;
}

ComponentResiduals component_field_equation_residuals(const PointGeometry& pg, const MatterFields& matter) {
  return {pg.curvature.einstein - 8.0 * kPi * matter.T, pg.torsion.Q + 16.0 * kPi * matter.Sigma};
}

}  // namespace ecsk::fieldeqs
