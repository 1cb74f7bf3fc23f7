#include "ecsk/cli/checks.hpp"

#include <algorithm>

#include "ecsk/geometry/levi_civita.hpp"
#include "ecsk/geometry/random_fields.hpp"
#include "ecsk/identities/identities.hpp"

namespace ecsk::cli {

using exprkit::Jet;
using forms::MixedForm;
using forms::Variance;
using geometry::PointGeometry;

PointContext::PointContext(const Scenario& scenario, const geometry::FormEvaluator& tetrad,
                           const geometry::FormEvaluator& connection, const exprkit::Point& x)
    : scenario_(scenario), tetrad_(tetrad), connection_(connection), x_(x) {}

const PointGeometry& PointContext::geometry(int depth) {
  Level& level = levels_[depth];
  if (!level.geometry) {
    auto pg = std::make_unique<PointGeometry>(geometry::evaluate_geometry(tetrad_, connection_, x_, depth));
    const double det = pg->metric.det_e.value();
    if (!(det > 0.0)) {
      throw ScenarioError("tetrad orientation: det e = " + std::to_string(det) + " must be positive");
    }
    level.geometry = std::move(pg);
  }
  return *level.geometry;
}

const fieldeqs::MatterFields& PointContext::matter(int depth) {
  const PointGeometry& pg = geometry(depth);
  Level& level = levels_[depth];
  if (!level.matter) {
    level.matter = std::make_unique<fieldeqs::MatterFields>(fieldeqs::evaluate_matter(scenario_.matter, pg));
  }
  return *level.matter;
}

const fieldeqs::FormMatter& PointContext::form_matter(int depth) {
  const auto& m = matter(depth);
  Level& level = levels_[depth];
  if (!level.form_matter) {
    level.form_matter = std::make_unique<fieldeqs::FormMatter>(
        fieldeqs::form_matter(*level.geometry, m, scenario_.matter.effective_kappa()));
  }
  return *level.form_matter;
}

double PointContext::field_scale(int depth) {
  const PointGeometry& pg = geometry(depth);
  return std::max({1.0, pg.e.max_abs(), pg.omega.max_abs(), pg.F.max_abs(), pg.torsion.theta.max_abs()});
}

namespace {

constexpr double kIdentityTol = 1e-9;
constexpr double kConservationTol = 1e-7;
constexpr double kFieldEquationTol = 1e-8;

// A check on the shared geometry at `depth`, scaled by the field magnitude.
template <class F>
Check geometric(std::string name, std::string summary, int depth, double tol, F residual) {
  return Check{std::move(name), std::move(summary), depth, tol, [depth, residual](PointContext& ctx) {
                 return CheckValue{residual(ctx), ctx.field_scale(depth)};
               }};
}

fieldeqs::FormMatter no_form_matter() {
  return {MixedForm<Jet>(3, 1, Variance::Lower), MixedForm<Jet>(3, 2, Variance::Lower)};
}

double theta_eta_norm_defect(const MixedForm<Jet>& a, const MixedForm<Jet>& b) {
  double worst = 0.0;
  for (int m = 0; m < a.spacetime_size(); ++m) {
    for (int n = 0; n < a.spacetime_size(); ++n) {
      double sa = 0.0;
      double sb = 0.0;
      for (int c = 0; c < 4; ++c) {
        sa += forms::eta_diag(c) * a.at(c, m).value() * a.at(c, n).value();
        sb += forms::eta_diag(c) * b.at(c, m).value() * b.at(c, n).value();
      }
      worst = std::max(worst, std::abs(sa - sb));
    }
  }
  return worst;
}

double matrix_defect(const forms::Matrix4<Jet>& a, const forms::Matrix4<Jet>& b) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) worst = std::max(worst, std::abs(a[i][j].value() - b[i][j].value()));
  }
  return worst;
}

std::vector<Check> build_registry() {
  std::vector<Check> r;

  r.push_back({"levi-civita-torsion", "torsion of the solved torsion-free connection of the tetrad", 0, 1e-12,
               [](PointContext& ctx) {
                 const auto lc = geometry::levi_civita_connection(ctx.tetrad());
                 const auto pg = geometry::evaluate_geometry(ctx.tetrad(), lc, ctx.x(), 0);
                 return CheckValue{pg.torsion.theta.max_abs(),
                                   std::max({1.0, pg.e.max_abs(), pg.omega.max_abs()})};
               }});

  r.push_back(geometric("metric-compatibility", "nabla g with the connection's Christoffel symbols", 0, 1e-10,
                        [](PointContext& ctx) {
                          return identities::metric_compatibility_residual(ctx.geometry(0)).max_abs();
                        }));

  r.push_back(geometric("leibniz-torsion", "1/2 eps d_w(e^e) - eps Q~^e", 0, 1e-12, [](PointContext& ctx) {
    const double kappa = ctx.scenario().matter.effective_kappa();
    return fieldeqs::torsion_equation(ctx.geometry(0), no_form_matter(), kappa).leibniz.max_abs();
  }));

  r.push_back(geometric("first-bianchi", "d_w Theta - F ^ e", 1, kIdentityTol, [](PointContext& ctx) {
    return identities::first_bianchi_residual(ctx.geometry(1)).max_abs();
  }));

  r.push_back(geometric("second-bianchi", "d_w F", 1, kIdentityTol, [](PointContext& ctx) {
    return identities::second_bianchi_residual(ctx.geometry(1).omega).max_abs();
  }));

  r.push_back({"d-squared", "d_w d_w alpha - F ^ alpha on fixed random forms alpha", 0, 1e-10,
               [](PointContext& ctx) {
                 const auto& chart = ctx.scenario().chart;
                 const auto omega = ctx.connection()(ctx.x(), 2);
                 const auto a1 = geometry::random_form(101, chart, 1, 1, Variance::Upper)(ctx.x(), 2);
                 const auto a2 = geometry::random_form(102, chart, 1, 2, Variance::Lower)(ctx.x(), 2);
                 const double res = std::max(identities::d_squared_residual(omega, a1).max_abs(),
                                             identities::d_squared_residual(omega, a2).max_abs());
                 const double scale = std::max({1.0, omega.max_abs(), a1.max_abs(), a2.max_abs(),
                                                geometry::curvature_field_strength(omega).max_abs()});
                 return CheckValue{res, scale};
               }});

  r.push_back(geometric("rewritten-lhs-curvature", "d_w(eps e^F) against its torsion and curvature terms", 1,
                        kIdentityTol,
                        [](PointContext& ctx) {
                          return identities::rewritten_lhs_check(ctx.geometry(1)).curvature_line.max_abs();
                        }));

  r.push_back(geometric("rewritten-lhs-torsion", "d_w(eps Q~^e) against the antisymmetrized eps e^F^e", 1,
                        kIdentityTol,
                        [](PointContext& ctx) {
                          return identities::rewritten_lhs_check(ctx.geometry(1)).torsion_line.max_abs();
                        }));

  r.push_back({"lorentz-covariance", "invariants and F' = Lambda F Lambda^-1 under a fixed local Lorentz field", 0,
               1e-10, [](PointContext& ctx) {
                 const auto lambda_field = geometry::random_lorentz_field(11, ctx.scenario().chart);
                 const auto [e2, w2] = geometry::lorentz_transform(ctx.tetrad(), ctx.connection(), lambda_field);
                 const auto moved = geometry::evaluate_geometry(e2, w2, ctx.x(), 0);
                 const auto& pg = ctx.geometry(0);
                 const auto lambda = lambda_field.evaluate(ctx.x(), 0);
                 double res = matrix_defect(moved.metric.g, pg.metric.g);
                 res = std::max(res, std::abs(moved.curvature.scalar.value() - pg.curvature.scalar.value()));
                 res = std::max(res, std::abs(moved.metric.det_e.value() - pg.metric.det_e.value()));
                 res = std::max(res, (forms::values(moved.torsion.Q) - forms::values(pg.torsion.Q)).max_abs());
                 res = std::max(res, theta_eta_norm_defect(moved.torsion.theta, pg.torsion.theta));
                 res = std::max(res, (moved.F - geometry::transform_field_strength(pg.F, lambda)).max_abs());
                 return CheckValue{res, std::max(ctx.field_scale(0), moved.omega.max_abs())};
               }});

  r.push_back(geometric("action-density", "Palatini-Cartan density minus c R det e", 0, 1e-10,
                        [](PointContext& ctx) {
                          const auto& pg = ctx.geometry(0);
                          const double c = fieldeqs::correspondence_constants().c_action;
                          const double s = fieldeqs::pc_action_density(pg.e, pg.F, 0.0).value();
                          return std::abs(s - c * pg.curvature.scalar.value() * pg.metric.det_e.value());
                        }));

  r.push_back(geometric("curvature-equation", "eps e^F + Lambda/3! eps e^e^e - kappa T_a", 0, kFieldEquationTol,
                        [](PointContext& ctx) {
                          const auto& m = ctx.scenario().matter;
                          return fieldeqs::curvature_equation_residual(ctx.geometry(0), ctx.form_matter(0),
                                                                       m.effective_kappa(), m.lambda)
                              .max_abs();
                        }));

  r.push_back(geometric("torsion-equation", "1/2 eps d_w(e^e) - kappa Sigma_ab", 0, kFieldEquationTol,
                        [](PointContext& ctx) {
                          return fieldeqs::torsion_equation(ctx.geometry(0), ctx.form_matter(0),
                                                            ctx.scenario().matter.effective_kappa())
                              .residual.max_abs();
                        }));

  r.push_back(geometric("einstein-equation", "G - 8 pi T", 0, kFieldEquationTol, [](PointContext& ctx) {
    return fieldeqs::component_field_equation_residuals(ctx.geometry(0), ctx.matter(0)).dG.max_abs();
  }));

  r.push_back(geometric("torsion-tensor-equation", "Q + 16 pi Sigma", 0, kFieldEquationTol, [](PointContext& ctx) {
    return fieldeqs::component_field_equation_residuals(ctx.geometry(0), ctx.matter(0)).dQ.max_abs();
  }));

  r.push_back(geometric("form-component-consistency", "dual(E_a) - c_T det e ebar (G - 8 pi T)", 0,
                        kFieldEquationTol, [](PointContext& ctx) {
                          const auto& pg = ctx.geometry(0);
                          const double kappa = ctx.scenario().matter.effective_kappa();
                          const auto E = fieldeqs::curvature_equation_residual(pg, ctx.form_matter(0), kappa, 0.0);
                          const auto dG = fieldeqs::component_field_equation_residuals(pg, ctx.matter(0)).dG;
                          const double c = fieldeqs::correspondence_constants().c_T;
                          return (fieldeqs::dual(E) - c * fieldeqs::frame_density_vector(pg, dG)).max_abs();
                        }));

  r.push_back(geometric("conservation-form-momentum", "d_w T_a - i_a Q~^b ^ T_b - i_a F^bc ^ Sigma_bc", 1,
                        kConservationTol, [](PointContext& ctx) {
                          return identities::conservation_form_residuals(ctx.geometry(1), ctx.form_matter(1))
                              .momentum.max_abs();
                        }));

  r.push_back(geometric("conservation-form-spin", "d_w Sigma_ab - 1/2 T_[a ^ e_b]", 1, kConservationTol,
                        [](PointContext& ctx) {
                          return identities::conservation_form_residuals(ctx.geometry(1), ctx.form_matter(1))
                              .spin.max_abs();
                        }));

  r.push_back(geometric("conservation-component-momentum", "nabla_m T^mn + T_sr Q^srn - Sigma_msr R^msrn", 1,
                        kConservationTol, [](PointContext& ctx) {
                          return identities::conservation_component_residuals(ctx.geometry(1), ctx.matter(1))
                              .momentum.max_abs();
                        }));

  r.push_back(geometric("conservation-component-spin", "nabla_m Sigma_sw^m + 1/2 T_[sw]", 1, kConservationTol,
                        [](PointContext& ctx) {
                          return identities::conservation_component_residuals(ctx.geometry(1), ctx.matter(1))
                              .spin.max_abs();
                        }));

  r.push_back(geometric("conservation-general-momentum",
                        "nabla_m T_n^m + Q_ml^l T_n^m - Q_nm^k T_k^m + R_nm^lk M_kl^m", 1, kConservationTol,
                        [](PointContext& ctx) {
                          return identities::conservation_component_residuals(ctx.geometry(1), ctx.matter(1))
                              .momentum_general.max_abs();
                        }));

  r.push_back(geometric("conservation-general-spin", "nabla_m M_sw^m + Q_ml^l M_sw^m - 1/2 T_[sw]", 1,
                        kConservationTol, [](PointContext& ctx) {
                          return identities::conservation_component_residuals(ctx.geometry(1), ctx.matter(1))
                              .spin_general.max_abs();
                        }));
  return r;
}

}  // namespace

const std::vector<Check>& check_registry() {
  static const std::vector<Check> registry = build_registry();
  return registry;
}

const Check* find_check(const std::string& name) {
  for (const auto& c : check_registry()) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace ecsk::cli
