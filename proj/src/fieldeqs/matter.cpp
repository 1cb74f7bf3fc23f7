#include "ecsk/fieldeqs/matter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ecsk/fieldeqs/field_equations.hpp"

namespace ecsk::fieldeqs {

using forms::Slot;

namespace {

constexpr double kPi = std::numbers::pi;

int derivative_depth(const PointGeometry& pg) {
  int order = exprkit::kMaxOrder;
  for (const Jet& j : pg.gamma.data()) order = std::min(order, j.order());
  return order;
}

Tensor<Jet> spin_from_expressions(const std::vector<Expression>& sigma, const exprkit::Point& x, int order) {
  Tensor<Jet> s({Slot::SpacetimeLower, Slot::SpacetimeLower, Slot::SpacetimeUpper});
  for (int p = 0; p < 6; ++p) {
    const int mu = geometry::kPairs[p][0];
    const int nu = geometry::kPairs[p][1];
    for (int sg = 0; sg < 4; ++sg) {
      const Jet v = exprkit::eval_jet(sigma[p * 4 + sg], x, order);
      s({mu, nu, sg}) = v;
      s({nu, mu, sg}) = -v;
    }
  }
  return s;
}

}  // namespace

double default_kappa() { return correspondence_constants().c_T * 8.0 * kPi; }

MatterModel vacuum_matter() { return {}; }

MatterModel manufactured_matter() {
  MatterModel m;
  m.mode = MatterMode::Manufactured;
  return m;
}

MatterModel explicit_matter(std::vector<Expression> T, std::vector<Expression> Sigma) {
  if (T.size() != 16) throw MatterError("explicit T needs 16 components");
  if (Sigma.size() != 24) throw MatterError("explicit Sigma needs 24 components");
  MatterModel m;
  m.mode = MatterMode::Explicit;
  m.T = std::move(T);
  m.Sigma = std::move(Sigma);
  return m;
}

Tensor<Jet> fault_tensor(const exprkit::Point& x, int order) {
  Jet v[4];
  for (int mu = 0; mu < 4; ++mu) v[mu] = Jet::variable(mu, x[mu], order);
  const Jet f = 1.0 + 0.3 * exprkit::sin(v[0] + 0.5 * v[3]) + 0.2 * v[1] * v[2] + 0.1 * v[3];
  constexpr double A[4][4] = {{0.0, 0.5, 0.0, 0.0}, {-0.5, 0.0, 0.0, -0.2}, {0.0, 0.0, 0.0, 0.3},
                              {0.0, 0.2, -0.3, 0.0}};
  Tensor<Jet> P({Slot::SpacetimeLower, Slot::SpacetimeLower});
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) P({mu, nu}) = ((mu == nu ? 1.0 : 0.0) + A[mu][nu]) * f;
  }
  return P;
}

double total_antisymmetry_defect(const Tensor<Jet>& t, const forms::Matrix4<Jet>& g) {
  double lowered[4][4][4];
  for (int m = 0; m < 4; ++m) {
    for (int n = 0; n < 4; ++n) {
      for (int r = 0; r < 4; ++r) {
        double acc = 0.0;
        for (int s = 0; s < 4; ++s) acc += t({m, n, s}).value() * g[s][r].value();
        lowered[m][n][r] = acc;
      }
    }
  }
  double worst = 0.0;
  for (int m = 0; m < 4; ++m) {
    for (int n = 0; n < 4; ++n) {
      for (int r = 0; r < 4; ++r) {
        worst = std::max(worst, std::abs(lowered[m][n][r] + lowered[n][m][r]));
        worst = std::max(worst, std::abs(lowered[m][n][r] + lowered[m][r][n]));
      }
    }
  }
  return worst;
}

Tensor<Jet> trace_completion(const Tensor<Jet>& s) {
  Jet trace[4];
  for (int l = 0; l < 4; ++l) {
    for (int r = 0; r < 4; ++r) trace[l] += s({l, r, r});
  }
  Tensor<Jet> m = s;
  for (int k = 0; k < 4; ++k) {
    for (int l = 0; l < 4; ++l) {
      m({k, l, k}) += trace[l];
      m({k, l, l}) -= trace[k];
    }
  }
  return m;
}

MatterFields evaluate_matter(const MatterModel& model, const PointGeometry& pg) {
  const int order = derivative_depth(pg);
  MatterFields out{Tensor<Jet>({Slot::SpacetimeLower, Slot::SpacetimeLower}),
                   Tensor<Jet>({Slot::SpacetimeLower, Slot::SpacetimeLower, Slot::SpacetimeUpper})};
  switch (model.mode) {
    case MatterMode::Vacuum:
      break;
    case MatterMode::Manufactured:
      out.T = (1.0 / (8.0 * kPi)) * pg.curvature.einstein;
      out.Sigma = (-1.0 / (16.0 * kPi)) * pg.torsion.Q;
      break;
    case MatterMode::Explicit:
      if (model.T.size() != 16 || model.Sigma.size() != 24) throw MatterError("explicit matter is incomplete");
      for (int i = 0; i < 16; ++i) out.T.at(i) = exprkit::eval_jet(model.T[i], pg.x, order);
      out.Sigma = spin_from_expressions(model.Sigma, pg.x, order);
      break;
  }
  if (model.fault_epsilon != 0.0) out.T += model.fault_epsilon * fault_tensor(pg.x, order);
  if (model.totally_antisymmetric_spin) {
    const double scale = 1.0 + out.Sigma.max_abs() + pg.torsion.Q.max_abs();
    if (total_antisymmetry_defect(out.Sigma, pg.metric.g) > 1e-9 * scale) {
      throw MatterError("spin tensor is not totally antisymmetric at " + exprkit::format_point(pg.x));
    }
    if (total_antisymmetry_defect(pg.torsion.Q, pg.metric.g) > 1e-9 * scale) {
      throw MatterError("torsion tensor is not totally antisymmetric at " + exprkit::format_point(pg.x));
    }
  }
  return out;
}

}  // namespace ecsk::fieldeqs
