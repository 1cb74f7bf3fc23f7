#include "ecsk/identities/identities.hpp"

namespace ecsk::identities {

using forms::eta_diag;
using forms::Slot;
using forms::Variance;

MixedForm<Jet> second_bianchi_residual(const MixedForm<Jet>& omega) {
  return second_bianchi_residual(omega, geometry::curvature_field_strength(omega));
}

MixedForm<Jet> second_bianchi_residual(const MixedForm<Jet>& omega, const MixedForm<Jet>& F) {
  return forms::covariant_exterior_derivative(omega, F);
}

MixedForm<Jet> curvature_wedge_frame(const MixedForm<Jet>& F, const MixedForm<Jet>& e) {
  return forms::contract_internal(forms::tensor_wedge(F, e), 1, 2);
}

MixedForm<Jet> first_bianchi_residual(const PointGeometry& pg) {
  return forms::covariant_exterior_derivative(pg.omega, pg.torsion.theta) - curvature_wedge_frame(pg.F, pg.e);
}

MixedForm<Jet> frame_interior(const PointGeometry& pg, const MixedForm<Jet>& x, int a) {
  std::array<Jet, 4> xi;
  for (int mu = 0; mu < 4; ++mu) xi[mu] = pg.ebar[mu][a];
  return forms::interior_product(xi, x);
}

namespace {

// (T_a ^ e_b - T_b ^ e_a) / 2 for a lower-index form T_a.
MixedForm<Jet> half_antisymmetrized_with_frame(const MixedForm<Jet>& t, const MixedForm<Jet>& e) {
  const auto w = forms::tensor_wedge(t, forms::flip_internal(e));
  return 0.5 * (w - forms::permute_internal(w, {1, 0}));
}

// Puts the 4-forms parts[a] into one 4-form with a lower frame index.
MixedForm<Jet> stack_lower(const std::array<MixedForm<Jet>, 4>& parts) {
  MixedForm<Jet> out(parts[0].degree(), 1, Variance::Lower);
  for (int a = 0; a < 4; ++a) {
    for (int m = 0; m < out.spacetime_size(); ++m) out.at(a, m) = parts[a].at(0, m);
  }
  return out;
}

// i_a Q~^b ^ A_b + i_a F^bc ^ B_bc, for each a.
MixedForm<Jet> torsion_and_curvature_flux(const PointGeometry& pg, const MixedForm<Jet>& A, const MixedForm<Jet>& B) {
  std::array<MixedForm<Jet>, 4> parts;
  for (int a = 0; a < 4; ++a) {
    parts[a] = forms::dot_wedge(frame_interior(pg, pg.torsion.theta, a), A) +
               forms::dot_wedge(frame_interior(pg, pg.F, a), B);
  }
  return stack_lower(parts);
}

}  // namespace

RewrittenLhs rewritten_lhs_check(const PointGeometry& pg) {
  const auto eps_eF = forms::epsilon_contract(forms::tensor_wedge(pg.e, pg.F));
  const auto eps_Qe = forms::epsilon_contract(forms::tensor_wedge(pg.torsion.theta, pg.e));
  RewrittenLhs r;
  r.curvature_line = forms::covariant_exterior_derivative(pg.omega, eps_eF) -
                     torsion_and_curvature_flux(pg, eps_eF, eps_Qe);
  const auto lhs = forms::covariant_exterior_derivative(pg.omega, eps_Qe);
  const auto rhs = half_antisymmetrized_with_frame(eps_eF, pg.e);
  r.torsion_line = lhs - rhs;
  r.torsion_line_opposite_sign = lhs + rhs;
  return r;
}

FormConservation conservation_form_residuals(const PointGeometry& pg, const FormMatter& matter) {
  FormConservation c;
  c.momentum = forms::covariant_exterior_derivative(pg.omega, matter.T) -
               torsion_and_curvature_flux(pg, matter.T, matter.Sigma);
  c.spin = forms::covariant_exterior_derivative(pg.omega, matter.Sigma) -
           half_antisymmetrized_with_frame(matter.T, pg.e);
  return c;
}

ComponentConservation conservation_component_residuals(const PointGeometry& pg, const MatterFields& matter) {
  const auto& gi = pg.metric.g_inv;
  const auto& T = matter.T;
  const auto& S = matter.Sigma;
  const auto M = fieldeqs::trace_completion(S);
  const auto G = forms::values(pg.gamma);
  const auto Q = forms::values(pg.torsion.Q);
  const auto R = forms::values(pg.curvature.riemann);
  double g[4][4];
  double ginv[4][4];
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      g[i][j] = pg.metric.g[i][j].value();
      ginv[i][j] = gi[i][j].value();
    }
  }
  double Tv[4][4];
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) Tv[i][j] = T({i, j}).value();
  }
  double gtrace[4] = {};  // Gamma^m_{m l}
  for (int l = 0; l < 4; ++l) {
    for (int m = 0; m < 4; ++m) gtrace[l] += G({m, m, l});
  }
  double qtrace[4] = {};  // Q_{m l}^l
  for (int m = 0; m < 4; ++m) {
    for (int l = 0; l < 4; ++l) qtrace[m] += Q({m, l, l});
  }

  // T^{mn} and T_n^m as jets, for their derivatives.
  Tensor<Jet> Tup({Slot::SpacetimeUpper, Slot::SpacetimeUpper});
  Tensor<Jet> Tmix({Slot::SpacetimeLower, Slot::SpacetimeUpper});
  for (int n = 0; n < 4; ++n) {
    for (int m = 0; m < 4; ++m) {
      Jet acc;
      for (int l = 0; l < 4; ++l) forms::mul_add(acc, T({n, l}), gi[l][m]);
      Tmix({n, m}) = acc;
    }
  }
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      Jet acc;
      for (int l = 0; l < 4; ++l) forms::mul_add(acc, gi[a][l], Tmix({l, b}));
      Tup({a, b}) = acc;
    }
  }

  ComponentConservation out{Tensor<double>({Slot::SpacetimeUpper}),
                            Tensor<double>({Slot::SpacetimeLower, Slot::SpacetimeLower}),
                            Tensor<double>({Slot::SpacetimeLower}),
                            Tensor<double>({Slot::SpacetimeLower, Slot::SpacetimeLower})};

  // Q^{srn} = g^{sa} g^{rb} Q_{ab}^n
  double Qup[4][4][4] = {};
  for (int s = 0; s < 4; ++s)
    for (int r = 0; r < 4; ++r)
      for (int n = 0; n < 4; ++n)
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) Qup[s][r][n] += ginv[s][a] * ginv[r][b] * Q({a, b, n});
  // Sigma_{msr} = Sigma_{ms}^l g_{lr}
  double Sl[4][4][4] = {};
  for (int m = 0; m < 4; ++m)
    for (int s = 0; s < 4; ++s)
      for (int r = 0; r < 4; ++r)
        for (int l = 0; l < 4; ++l) Sl[m][s][r] += S({m, s, l}).value() * g[l][r];
  // R^{msrn} = g^{ma} g^{sb} g^{rc} R_{abc}^n, built one slot at a time.
  double R1[4][4][4][4] = {};
  double R2[4][4][4][4] = {};
  double Rup[4][4][4][4] = {};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int r = 0; r < 4; ++r)
        for (int n = 0; n < 4; ++n)
          for (int c = 0; c < 4; ++c) R1[a][b][r][n] += ginv[r][c] * R({a, b, c, n});
  for (int a = 0; a < 4; ++a)
    for (int s = 0; s < 4; ++s)
      for (int r = 0; r < 4; ++r)
        for (int n = 0; n < 4; ++n)
          for (int b = 0; b < 4; ++b) R2[a][s][r][n] += ginv[s][b] * R1[a][b][r][n];
  for (int m = 0; m < 4; ++m)
    for (int s = 0; s < 4; ++s)
      for (int r = 0; r < 4; ++r)
        for (int n = 0; n < 4; ++n)
          for (int a = 0; a < 4; ++a) Rup[m][s][r][n] += ginv[m][a] * R2[a][s][r][n];

  for (int n = 0; n < 4; ++n) {
    double div = 0.0;
    for (int m = 0; m < 4; ++m) div += Tup({m, n}).derivative(m).value();
    for (int m = 0; m < 4; ++m) {
      for (int l = 0; l < 4; ++l) {
        div += G({m, m, l}) * Tup({l, n}).value() + G({n, m, l}) * Tup({m, l}).value();
      }
    }
    double torsion = 0.0;
    for (int s = 0; s < 4; ++s)
      for (int r = 0; r < 4; ++r) torsion += Tv[s][r] * Qup[s][r][n];
    double curvature = 0.0;
    for (int m = 0; m < 4; ++m)
      for (int s = 0; s < 4; ++s)
        for (int r = 0; r < 4; ++r) curvature += Sl[m][s][r] * Rup[m][s][r][n];
    out.momentum({n}) = div + torsion - curvature;
  }

  // nabla_m X_{sw}^m for a (lower, lower, upper) jet tensor.
  auto divergence3 = [&](const Tensor<Jet>& X, int s, int w) {
    double acc = 0.0;
    for (int m = 0; m < 4; ++m) acc += X({s, w, m}).derivative(m).value();
    for (int m = 0; m < 4; ++m) {
      for (int l = 0; l < 4; ++l) {
        acc -= G({l, m, s}) * X({l, w, m}).value();
        acc -= G({l, m, w}) * X({s, l, m}).value();
      }
    }
    for (int l = 0; l < 4; ++l) acc += gtrace[l] * X({s, w, l}).value();
    return acc;
  };

  for (int s = 0; s < 4; ++s) {
    for (int w = 0; w < 4; ++w) {
      const double anti = 0.5 * (Tv[s][w] - Tv[w][s]);
      out.spin({s, w}) = divergence3(S, s, w) + anti;
      double qm = 0.0;
      for (int m = 0; m < 4; ++m) qm += qtrace[m] * M({s, w, m}).value();
      out.spin_general({s, w}) = divergence3(M, s, w) + qm - anti;
    }
  }

  for (int n = 0; n < 4; ++n) {
    double acc = 0.0;
    for (int m = 0; m < 4; ++m) acc += Tmix({n, m}).derivative(m).value();
    for (int m = 0; m < 4; ++m) {
      for (int k = 0; k < 4; ++k) acc -= G({k, m, n}) * Tmix({k, m}).value();
      for (int l = 0; l < 4; ++l) acc += G({m, m, l}) * Tmix({n, l}).value();
      acc += qtrace[m] * Tmix({n, m}).value();
      for (int k = 0; k < 4; ++k) acc -= Q({n, m, k}) * Tmix({k, m}).value();
    }
    for (int m = 0; m < 4; ++m)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l)
          for (int r = 0; r < 4; ++r) acc += ginv[l][r] * R({n, m, r, k}) * M({k, l, m}).value();
    out.momentum_general({n}) = acc;
  }
  return out;
}

Tensor<double> metric_compatibility_residual(const PointGeometry& pg) {
  const auto G = forms::values(pg.gamma);
  Tensor<double> out({Slot::SpacetimeLower, Slot::SpacetimeLower, Slot::SpacetimeLower});
  for (int l = 0; l < 4; ++l) {
    for (int m = 0; m < 4; ++m) {
      for (int n = 0; n < 4; ++n) {
        double acc = pg.metric.g[m][n].derivative(l).value();
        for (int r = 0; r < 4; ++r) {
          acc -= G({r, l, m}) * pg.metric.g[r][n].value();
          acc -= G({r, l, n}) * pg.metric.g[m][r].value();
        }
        out({l, m, n}) = acc;
      }
    }
  }
  return out;
}

MixedForm<Jet> curvature_action(const MixedForm<Jet>& F, const MixedForm<Jet>& alpha) {
  const int k = alpha.degree();
  const int r = alpha.rank();
  if (k + 2 > 4) throw forms::FormError("curvature action degree overflow");
  MixedForm<Jet> out(k + 2, r, alpha.variance(), alpha.internal_antisymmetric());
  const bool upper = alpha.variance() == Variance::Upper;
  const auto& sh = forms::shuffles(2, k);
  for (int ci : out.canonical_internal()) {
    const auto ad = forms::unflatten(ci, r);
    for (int m : forms::sorted_tuples(k + 2)) {
      const auto md = forms::unflatten(m, k + 2);
      Jet acc;
      for (int s = 0; s < r; ++s) {
        for (int c = 0; c < 4; ++c) {
          auto sub = ad;
          sub[s] = c;
          const int xi = forms::flatten(sub.data(), r);
          const int fi = upper ? ad[s] * 4 + c : c * 4 + ad[s];
          const int sign = static_cast<int>(upper ? eta_diag(c) : -eta_diag(ad[s]));
          for (const auto& sf : sh) {
            const int mf[2] = {md[sf.first[0]], md[sf.first[1]]};
            int mx[4];
            for (int i = 0; i < k; ++i) mx[i] = md[sf.second[i]];
            forms::add_signed(acc, F.at(fi, forms::flatten(mf, 2)) * alpha.at(xi, forms::flatten(mx, k)),
                              sign * sf.sign);
          }
        }
      }
      out.at(ci, m) = acc;
    }
  }
  out.fill_images();
  return out;
}

MixedForm<Jet> d_squared_residual(const MixedForm<Jet>& omega, const MixedForm<Jet>& alpha) {
  const auto twice = forms::covariant_exterior_derivative(omega, forms::covariant_exterior_derivative(omega, alpha));
  return twice - curvature_action(geometry::curvature_field_strength(omega), alpha);
}

}  // namespace ecsk::identities
