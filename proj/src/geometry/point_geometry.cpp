#include "ecsk/geometry/point_geometry.hpp"

#include <cmath>
#include <string>

#include "ecsk/geometry/linalg.hpp"

namespace ecsk::geometry {

using forms::eta_diag;
using forms::Slot;
using forms::Variance;

namespace {

Matrix4<Jet> tetrad_matrix(const MixedForm<Jet>& e) {
  if (e.degree() != 1 || e.rank() != 1 || e.variance() != Variance::Upper) {
    throw GeometryError("tetrad must be a 1-form with one upper internal index");
  }
  Matrix4<Jet> m;
  for (int a = 0; a < 4; ++a) {
    for (int mu = 0; mu < 4; ++mu) m[a][mu] = e.at(a, mu);
  }
  return m;
}

void require_connection(const MixedForm<Jet>& w) {
  if (w.degree() != 1 || w.rank() != 2 || w.variance() != Variance::Upper) {
    throw GeometryError("connection must be a 1-form with two upper internal indices");
  }
}

InverseResult<Jet> invert_tetrad(const MixedForm<Jet>& e, double det_floor) {
  InverseResult<Jet> inv;
  try {
    inv = invert4(tetrad_matrix(e));
  } catch (const SingularMatrixError&) {
    throw SingularTetradError("singular tetrad (det e = 0)");
  }
  if (!(std::abs(inv.det.value()) > det_floor)) {
    throw SingularTetradError("singular tetrad (|det e| = " + std::to_string(std::abs(inv.det.value())) +
                              " below threshold)");
  }
  return inv;
}

}  // namespace

MetricData metric_from_tetrad(const MixedForm<Jet>& e, double det_floor) {
  const InverseResult<Jet> inv = invert_tetrad(e, det_floor);
  MetricData m;
  m.det_e = inv.det;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu; nu < 4; ++nu) {
      Jet g{};
      Jet gi{};
      for (int a = 0; a < 4; ++a) {
        forms::add_signed(g, e.at(a, mu) * e.at(a, nu), static_cast<int>(eta_diag(a)));
        forms::add_signed(gi, inv.inverse[mu][a] * inv.inverse[nu][a], static_cast<int>(eta_diag(a)));
      }
      m.g[mu][nu] = g;
      m.g[nu][mu] = g;
      m.g_inv[mu][nu] = gi;
      m.g_inv[nu][mu] = gi;
    }
  }
  return m;
}

Matrix4<Jet> inverse_tetrad(const MixedForm<Jet>& e, double det_floor) {
  // The inverse of the matrix e[a][mu] is indexed [mu][a].
  return invert_tetrad(e, det_floor).inverse;
}

Tensor<Jet> covariant_D(const MixedForm<Jet>& omega, const MixedForm<Jet>& alpha) {
  require_connection(omega);
  const int r = alpha.rank();
  const int k = alpha.degree();
  const bool upper = alpha.variance() == Variance::Upper;
  std::vector<Slot> slots(r, upper ? Slot::InternalUpper : Slot::InternalLower);
  for (int i = 0; i <= k; ++i) slots.push_back(Slot::SpacetimeLower);
  Tensor<Jet> out(slots);

  for (int ai = 0; ai < alpha.internal_size(); ++ai) {
    const auto ad = forms::unflatten(ai, r);
    for (int mu = 0; mu < 4; ++mu) {
      for (int m = 0; m < alpha.spacetime_size(); ++m) {
        Jet acc = alpha.at(ai, m).derivative(mu);
        for (int s = 0; s < r; ++s) {
          for (int c = 0; c < 4; ++c) {
            auto sub = ad;
            sub[s] = c;
            const int xi = forms::flatten(sub.data(), r);
            if (upper) {
              // + w^{a c}_mu eta_cc alpha^{..c..}
              forms::add_signed(acc, omega.at(ad[s] * 4 + c, mu) * alpha.at(xi, m), static_cast<int>(eta_diag(c)));
            } else {
              // - w^{c a}_mu eta_aa alpha_{..c..}
              forms::add_signed(acc, omega.at(c * 4 + ad[s], mu) * alpha.at(xi, m),
                                -static_cast<int>(eta_diag(ad[s])));
            }
          }
        }
        out.at((ai * 4 + mu) * alpha.spacetime_size() + m) = acc;
      }
    }
  }
  return out;
}

Tensor<Jet> christoffel(const MixedForm<Jet>& e, const MixedForm<Jet>& omega, const Matrix4<Jet>& ebar) {
  require_connection(omega);
  // D[a][mu][nu] = d_mu e^a_nu + w^{ab}_mu eta_bb e^b_nu
  const Tensor<Jet> D = covariant_D(omega, e);
  Tensor<Jet> gamma({Slot::SpacetimeUpper, Slot::SpacetimeLower, Slot::SpacetimeLower});
  for (int s = 0; s < 4; ++s) {
    for (int mu = 0; mu < 4; ++mu) {
      for (int nu = 0; nu < 4; ++nu) {
        Jet acc{};
        for (int a = 0; a < 4; ++a) forms::mul_add(acc, ebar[s][a], D.at((a * 4 + mu) * 4 + nu));
        gamma.at((s * 4 + mu) * 4 + nu) = acc;
      }
    }
  }
  return gamma;
}

Tensor<Jet> christoffel(const MixedForm<Jet>& e, const MixedForm<Jet>& omega) {
  return christoffel(e, omega, inverse_tetrad(e));
}

MixedForm<Jet> curvature_field_strength(const MixedForm<Jet>& omega) {
  require_connection(omega);
  MixedForm<Jet> F = forms::exterior_derivative(omega);
  for (int ab : forms::sorted_tuples(2)) {
    const int a = ab / 4;
    const int b = ab % 4;
    for (int mn : forms::sorted_tuples(2)) {
      const int mu = mn / 4;
      const int nu = mn % 4;
      Jet acc = F.at(ab, mn);
      for (int c = 0; c < 4; ++c) {
        const int sign = static_cast<int>(eta_diag(c));
        forms::add_signed(acc, omega.at(a * 4 + c, mu) * omega.at(c * 4 + b, nu), sign);
        forms::add_signed(acc, omega.at(a * 4 + c, nu) * omega.at(c * 4 + b, mu), -sign);
      }
      F.at(ab, mn) = acc;
    }
  }
  F.fill_images();
  return F;
}

CurvatureTensors curvature_tensors(const MixedForm<Jet>& e, const MixedForm<Jet>& F, const Matrix4<Jet>& ebar,
                                   const MetricData& metric) {
  CurvatureTensors out;
  out.riemann = Tensor<Jet>({Slot::SpacetimeLower, Slot::SpacetimeLower, Slot::SpacetimeLower, Slot::SpacetimeUpper});
  for (int mn : forms::sorted_tuples(2)) {
    const int mu = mn / 4;
    const int nu = mn % 4;
    // (F eta e)^a_{mu nu w}
    std::array<std::array<Jet, 4>, 4> fe;
    for (int a = 0; a < 4; ++a) {
      for (int w = 0; w < 4; ++w) {
        Jet acc{};
        for (int b = 0; b < 4; ++b) {
          forms::add_signed(acc, F.at(a * 4 + b, mn) * e.at(b, w), static_cast<int>(eta_diag(b)));
        }
        fe[a][w] = acc;
      }
    }
    for (int w = 0; w < 4; ++w) {
      for (int s = 0; s < 4; ++s) {
        Jet acc{};
        for (int a = 0; a < 4; ++a) forms::mul_add(acc, ebar[s][a], fe[a][w]);
        out.riemann.at(((mu * 4 + nu) * 4 + w) * 4 + s) = acc;
        out.riemann.at(((nu * 4 + mu) * 4 + w) * 4 + s) = -acc;
      }
    }
  }

  out.ricci = Tensor<Jet>({Slot::SpacetimeLower, Slot::SpacetimeLower});
  for (int mu = 0; mu < 4; ++mu) {
    for (int w = 0; w < 4; ++w) {
      Jet acc{};
      for (int s = 0; s < 4; ++s) acc += out.riemann.at(((mu * 4 + s) * 4 + w) * 4 + s);
      out.ricci.at(mu * 4 + w) = acc;
    }
  }

  Jet scalar{};
  for (int mu = 0; mu < 4; ++mu) {
    for (int w = 0; w < 4; ++w) forms::mul_add(scalar, metric.g_inv[mu][w], out.ricci.at(mu * 4 + w));
  }
  out.scalar = scalar;

  Jet frame{};
  for (int ab : forms::sorted_tuples(2)) {
    const int a = ab / 4;
    const int b = ab % 4;
    for (int mw : forms::sorted_tuples(2)) {
      const int mu = mw / 4;
      const int w = mw % 4;
      // Both (ab) orders and both (mu w) orders contribute equally.
      const Jet pair = ebar[mu][a] * ebar[w][b] - ebar[w][a] * ebar[mu][b];
      forms::mul_add(frame, pair, F.at(ab, mw));
    }
  }
  out.scalar_frame = -2.0 * frame;

  out.einstein = Tensor<Jet>({Slot::SpacetimeLower, Slot::SpacetimeLower});
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      out.einstein.at(mu * 4 + nu) = out.ricci.at(mu * 4 + nu) - 0.5 * (metric.g[mu][nu] * out.scalar);
    }
  }
  return out;
}

CurvatureTensors curvature_tensors(const MixedForm<Jet>& e, const MixedForm<Jet>& omega) {
  const MetricData metric = metric_from_tetrad(e);
  return curvature_tensors(e, curvature_field_strength(omega), inverse_tetrad(e), metric);
}

TorsionData torsion(const MixedForm<Jet>& e, const MixedForm<Jet>& omega, const Matrix4<Jet>& ebar) {
  TorsionData out;
  out.theta = forms::covariant_exterior_derivative(omega, e);
  out.Q = Tensor<Jet>({Slot::SpacetimeLower, Slot::SpacetimeLower, Slot::SpacetimeUpper});
  for (int mn : forms::sorted_tuples(2)) {
    const int mu = mn / 4;
    const int nu = mn % 4;
    for (int s = 0; s < 4; ++s) {
      Jet acc{};
      for (int a = 0; a < 4; ++a) forms::mul_add(acc, ebar[s][a], out.theta.at(a, mn));
      out.Q.at((mu * 4 + nu) * 4 + s) = acc;
      out.Q.at((nu * 4 + mu) * 4 + s) = -acc;
    }
  }
  return out;
}

TorsionData torsion(const MixedForm<Jet>& e, const MixedForm<Jet>& omega) {
  return torsion(e, omega, inverse_tetrad(e));
}

Tensor<Jet> torsion_from_christoffel(const Tensor<Jet>& gamma) {
  Tensor<Jet> Q({Slot::SpacetimeLower, Slot::SpacetimeLower, Slot::SpacetimeUpper});
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      for (int s = 0; s < 4; ++s) {
        Q.at((mu * 4 + nu) * 4 + s) = gamma.at((s * 4 + mu) * 4 + nu) - gamma.at((s * 4 + nu) * 4 + mu);
      }
    }
  }
  return Q;
}

PointGeometry compute_point_geometry(const Point& x, MixedForm<Jet> e, MixedForm<Jet> omega, double det_floor) {
  PointGeometry pg;
  pg.x = x;
  pg.e = std::move(e);
  pg.omega = std::move(omega);
  require_connection(pg.omega);
  const InverseResult<Jet> inv = invert_tetrad(pg.e, det_floor);
  pg.metric = metric_from_tetrad(pg.e, det_floor);
  pg.ebar = inv.inverse;
  pg.gamma = christoffel(pg.e, pg.omega, pg.ebar);
  pg.F = curvature_field_strength(pg.omega);
  pg.curvature = curvature_tensors(pg.e, pg.F, pg.ebar, pg.metric);
  pg.torsion = torsion(pg.e, pg.omega, pg.ebar);
  return pg;
}

PointGeometry evaluate_geometry(const FormEvaluator& tetrad, const FormEvaluator& connection, const Point& x,
                                int depth, double det_floor) {
  if (depth < 0 || depth + 1 > exprkit::kMaxOrder) {
    throw exprkit::JetOrderError("geometry depth " + std::to_string(depth) + " needs jets beyond order 3");
  }
  return compute_point_geometry(x, tetrad(x, depth + 1), connection(x, depth + 1), det_floor);
}

}  // namespace ecsk::geometry
