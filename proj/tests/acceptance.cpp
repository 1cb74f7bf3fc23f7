// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "ecsk/cli/builtins.hpp"
#include "ecsk/cli/report.hpp"
#include "ecsk/cli/runner.hpp"
#include "ecsk/fieldeqs/field_equations.hpp"
#include "ecsk/fieldeqs/matter.hpp"
#include "ecsk/geometry/levi_civita.hpp"
#include "ecsk/geometry/lorentz.hpp"
#include "ecsk/identities/identities.hpp"
#include "test_support.hpp"

using namespace ecsk;
using geometry::evaluate_geometry;
using geometry::PointGeometry;

namespace {

// Pinned thresholds.
constexpr double kFlatTol = 1e-12;
constexpr double kVacuumTol = 1e-8;
constexpr double kKretschmannRelTol = 1e-6;
constexpr double kBianchiTol = 1e-10;
constexpr double kDSquaredTol = 1e-10;
constexpr double kFlatDSquaredTol = 1e-11;
constexpr double kLeviCivitaTol = 1e-12;
constexpr double kPolarChristoffelTol = 1e-10;
constexpr double kFdChristoffelTol = 1e-7;
constexpr double kLeibnizTol = 1e-12;
constexpr double kRewrittenTol = 1e-9;
constexpr double kConservationTol = 1e-7;
constexpr double kFaultRatioTol = 0.2;
constexpr double kLorentzTol = 1e-10;
constexpr double kMetricCompatTol = 1e-10;
constexpr double kJetOracleTol = 1e-6;

constexpr std::uint64_t kSeed = 20251015;
constexpr int kPoints = 100;

const exprkit::Chart kBox = geometry::unit_box_chart();

struct Outcome {
  bool pass = false;
  std::string detail{};
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// Worst value of `f` over the sampled points of a builtin.
double over_builtin(const std::string& name, int points, int depth,
                    const std::function<double(const PointGeometry&)>& f) {
  const auto s = cli::builtin_scenario(name);
  const auto e = s.tetrad_evaluator();
  const auto w = s.connection_evaluator();
  double worst = 0.0;
  for (const auto& x : cli::sample_points(s.chart, points, kSeed)) {
    worst = std::max(worst, f(evaluate_geometry(e, w, x, depth)));
  }
  return worst;
}

double tensor_max(const forms::Tensor<exprkit::Jet>& t) { return forms::values(t).max_abs(); }

Outcome flat_space() {
  const auto report = cli::run_checks(cli::builtin_scenario("minkowski"), {.points = kPoints, .seed = kSeed});
  double worst = 0.0;
  for (const auto& c : report.checks) worst = std::max(worst, c.max_residual);
  const double fields = over_builtin("minkowski", kPoints, 1, [](const PointGeometry& pg) {
    return std::max({tensor_max(pg.gamma), pg.F.max_abs(), tensor_max(pg.curvature.riemann),
                     tensor_max(pg.curvature.ricci), std::abs(pg.curvature.scalar.value()),
                     pg.torsion.theta.max_abs(), tensor_max(pg.torsion.Q), tensor_max(pg.curvature.einstein)});
  });
  return {report.pass && worst < kFlatTol && fields < kFlatTol,
          "residuals " + fmt(worst) + ", fields " + fmt(fields)};
}

Outcome schwarzschild_vacuum() {
  double ricci = 0.0;
  double einstein = 0.0;
  const double kretschmann = over_builtin("schwarzschild", kPoints, 0, [&](const PointGeometry& pg) {
    ricci = std::max(ricci, tensor_max(pg.curvature.ricci));
    einstein = std::max(einstein, tensor_max(pg.curvature.einstein));
    const double r = pg.x[0];
    const double expected = 48.0 / std::pow(r, 6);
    return std::abs(test::kretschmann(pg) - expected) / expected;
  });
  return {ricci < kVacuumTol && einstein < kVacuumTol && kretschmann < kKretschmannRelTol,
          "Ricci " + fmt(ricci) + ", G " + fmt(einstein) + ", Kretschmann rel " + fmt(kretschmann)};
}

Outcome second_bianchi() {
  double worst = 0.0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto w = geometry::random_connection(seed, kBox).evaluator();
    for (const auto& x : cli::sample_points(kBox, kPoints, kSeed + seed)) {
      worst = std::max(worst, identities::second_bianchi_residual(w(x, 2)).max_abs());
    }
  }
  return {worst < kBianchiTol, "max " + fmt(worst)};
}

Outcome first_bianchi() {
  double worst = 0.0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto e = geometry::random_tetrad(seed, kBox).evaluator();
    const auto w = geometry::random_connection(seed, kBox).evaluator();
    for (const auto& x : cli::sample_points(kBox, kPoints, kSeed + seed)) {
      worst = std::max(worst, identities::first_bianchi_residual(evaluate_geometry(e, w, x, 1)).max_abs());
    }
  }
  return {worst < kBianchiTol, "max " + fmt(worst)};
}

Outcome d_squared() {
  std::mt19937_64 rng(kSeed);
  double worst = 0.0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto w = geometry::random_connection(seed, kBox).evaluator();
    const int degree = 1 + static_cast<int>(seed % 2);
    const auto alpha = geometry::random_form(seed + 50, kBox, degree, 1 + static_cast<int>(seed % 3),
                                             seed % 2 ? forms::Variance::Upper : forms::Variance::Lower);
    const auto x = test::random_point(rng, kBox);
    worst = std::max(worst, identities::d_squared_residual(w(x, 2), alpha(x, 2)).max_abs());
  }
  const auto e = test::tetrad_from(test::identity_tetrad_text(), kBox);
  const auto [e2, w2] =
      geometry::lorentz_transform(e, test::zero_connection(kBox), geometry::random_lorentz_field(3, kBox));
  double flat = 0.0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto x = test::random_point(rng, kBox);
    const auto alpha = geometry::random_form(seed + 80, kBox, 1, 1)(x, 2);
    const auto w = w2(x, 2);
    flat = std::max(flat, forms::covariant_exterior_derivative(w, forms::covariant_exterior_derivative(w, alpha))
                              .max_abs());
  }
  return {worst < kDSquaredTol && flat < kFlatDSquaredTol, "random " + fmt(worst) + ", flat " + fmt(flat)};
}

Outcome levi_civita() {
  double theta = 0.0;
  for (const auto& name : cli::builtin_names()) {
    const auto s = cli::builtin_scenario(name);
    const auto e = s.tetrad_evaluator();
    const auto lc = geometry::levi_civita_connection(e);
    for (const auto& x : cli::sample_points(s.chart, kPoints, kSeed)) {
      theta = std::max(theta, evaluate_geometry(e, lc, x, 0).torsion.theta.max_abs());
    }
  }
  const auto polar = cli::builtin_scenario("flat-polar");
  const auto e = polar.tetrad_evaluator();
  const auto lc = geometry::levi_civita_connection(e);
  double exact = 0.0;
  double oracle = 0.0;
  for (const auto& x : cli::sample_points(polar.chart, 20, kSeed)) {
    const auto pg = evaluate_geometry(e, lc, x, 0);
    const double r = x[1];
    exact = std::max({exact, std::abs(pg.gamma({1, 2, 2}).value() + r),
                      std::abs(pg.gamma({2, 1, 2}).value() - 1.0 / r)});
    for (int s = 0; s < 4; ++s)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
          oracle = std::max(oracle, std::abs(pg.gamma({s, m, n}).value() - test::fd_christoffel(e, x, s, m, n)));
  }
  return {theta < kLeviCivitaTol && exact < kPolarChristoffelTol && oracle < kFdChristoffelTol,
          "torsion " + fmt(theta) + ", polar " + fmt(exact) + ", FD metric oracle " + fmt(oracle)};
}

Outcome leibniz() {
  double worst = 0.0;
  for (const auto& name : cli::builtin_names()) {
    const double kappa = cli::builtin_scenario(name).matter.effective_kappa();
    worst = std::max(worst, over_builtin(name, kPoints, 0, [&](const PointGeometry& pg) {
      const fieldeqs::FormMatter none{forms::MixedForm<exprkit::Jet>(3, 1, forms::Variance::Lower),
                                      forms::MixedForm<exprkit::Jet>(3, 2, forms::Variance::Lower)};
      return fieldeqs::torsion_equation(pg, none, kappa).leibniz.max_abs();
    }));
  }
  return {worst < kLeibnizTol, "max " + fmt(worst)};
}

Outcome rewritten_lhs() {
  double curvature = 0.0;
  double torsion = 0.0;
  for (const char* name : {"schwarzschild", "flat-contorsion"}) {
    (void)over_builtin(name, 50, 1, [&](const PointGeometry& pg) {
      const auto r = identities::rewritten_lhs_check(pg);
      curvature = std::max(curvature, r.curvature_line.max_abs());
      torsion = std::max(torsion, r.torsion_line.max_abs());
      return 0.0;
    });
  }
  return {curvature < kRewrittenTol && torsion < kRewrittenTol,
          "curvature " + fmt(curvature) + ", torsion " + fmt(torsion)};
}

struct Conservation {
  double form = 0.0;
  double component = 0.0;
};

Conservation conservation(const PointGeometry& pg, const fieldeqs::MatterModel& model) {
  const auto mf = fieldeqs::evaluate_matter(model, pg);
  const auto f = identities::conservation_form_residuals(
      pg, fieldeqs::form_matter(pg, mf, model.effective_kappa()));
  const auto c = identities::conservation_component_residuals(pg, mf);
  return {std::max(f.momentum.max_abs(), f.spin.max_abs()),
          std::max({c.momentum.max_abs(), c.spin.max_abs(), c.momentum_general.max_abs(), c.spin_general.max_abs()})};
}

Outcome conservation_laws() {
  Conservation worst;
  double ratio_error = 0.0;
  for (const char* name : {"flrw", "schwarzschild", "flat-contorsion"}) {
    const auto s = cli::builtin_scenario(name);
    const auto e = s.tetrad_evaluator();
    const auto w = s.connection_evaluator();
    auto clean = fieldeqs::manufactured_matter();
    auto small = clean;
    small.fault_epsilon = 1e-4;
    auto large = clean;
    large.fault_epsilon = 1e-3;
    const auto points = cli::sample_points(s.chart, kPoints, kSeed);
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto pg = evaluate_geometry(e, w, points[i], 1);
      const auto c = conservation(pg, clean);
      worst.form = std::max(worst.form, c.form);
      worst.component = std::max(worst.component, c.component);
      if (i % 10 == 0) {
        const auto a = conservation(pg, small);
        const auto b = conservation(pg, large);
        ratio_error = std::max({ratio_error, std::abs(b.form / a.form / 10.0 - 1.0),
                                std::abs(b.component / a.component / 10.0 - 1.0)});
      }
    }
  }
  return {worst.form < kConservationTol && worst.component < kConservationTol && ratio_error < kFaultRatioTol,
          "form " + fmt(worst.form) + ", component " + fmt(worst.component) + ", fault scaling error " +
              fmt(ratio_error)};
}

double eta_norm_defect(const forms::MixedForm<exprkit::Jet>& a, const forms::MixedForm<exprkit::Jet>& b) {
  double worst = 0.0;
  for (int m = 0; m < a.spacetime_size(); ++m)
    for (int n = 0; n < a.spacetime_size(); ++n) {
      double sa = 0.0;
      double sb = 0.0;
      for (int c = 0; c < 4; ++c) {
        sa += forms::eta_diag(c) * a.at(c, m).value() * a.at(c, n).value();
        sb += forms::eta_diag(c) * b.at(c, m).value() * b.at(c, n).value();
      }
      worst = std::max(worst, std::abs(sa - sb));
    }
  return worst;
}

Outcome lorentz_covariance() {
  double worst = 0.0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto e = geometry::random_tetrad(seed + 10, kBox).evaluator();
    const auto w = geometry::random_connection(seed + 10, kBox).evaluator();
    const auto lambda = geometry::random_lorentz_field(seed, kBox);
    const auto [e2, w2] = geometry::lorentz_transform(e, w, lambda);
    for (const auto& x : cli::sample_points(kBox, 20, kSeed + seed)) {
      const auto a = evaluate_geometry(e, w, x, 0);
      const auto b = evaluate_geometry(e2, w2, x, 0);
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
          worst = std::max(worst, std::abs(a.metric.g[m][n].value() - b.metric.g[m][n].value()));
      worst = std::max({worst, std::abs(a.curvature.scalar.value() - b.curvature.scalar.value()),
                        std::abs(a.metric.det_e.value() - b.metric.det_e.value()),
                        (forms::values(a.torsion.Q) - forms::values(b.torsion.Q)).max_abs(),
                        eta_norm_defect(a.torsion.theta, b.torsion.theta)});
      const auto moved = geometry::transform_field_strength(a.F, lambda.evaluate(x, 0));
      for (std::size_t i = 0; i < moved.data().size(); ++i)
        worst = std::max(worst, std::abs(moved.data()[i].value() - b.F.data()[i].value()));
    }
  }
  const auto e = test::tetrad_from(test::identity_tetrad_text(), kBox);
  const auto rot = geometry::LorentzField::rotation(1, 2, exprkit::parse_expression("0.7*sin(x + 2*t) + y*z", kBox));
  const auto boosted = geometry::random_lorentz_field(7, kBox);
  double gauge = 0.0;
  for (const auto& field : {rot, boosted}) {
    const auto [e2, w2] = geometry::lorentz_transform(e, test::zero_connection(kBox), field);
    for (const auto& x : cli::sample_points(kBox, 20, kSeed)) {
      gauge = std::max(gauge, evaluate_geometry(e2, w2, x, 0).F.max_abs());
    }
  }
  return {worst < kLorentzTol && gauge < kLorentzTol, "invariants " + fmt(worst) + ", pure gauge F " + fmt(gauge)};
}

Outcome metric_compatibility() {
  double worst = 0.0;
  for (const auto& name : cli::builtin_names()) {
    worst = std::max(worst, over_builtin(name, kPoints, 0, [](const PointGeometry& pg) {
      return identities::metric_compatibility_residual(pg).max_abs();
    }));
  }
  return {worst < kMetricCompatTol, "max " + fmt(worst)};
}

Outcome jets_vs_finite_differences() {
  const double worst = test::jet_oracle_corpus(200, kSeed);
  return {worst < kJetOracleTol, "max relative " + fmt(worst)};
}

int cli_status(const std::string& args) {
  const std::string cmd = std::string(ECSK_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

cli::CheckReport without_timing(cli::CheckReport r) {
  r.wall_time_seconds = 0.0;
  return r;
}

Outcome determinism_and_cli() {
  std::string detail;
  bool ok = true;
  for (const auto& name : cli::builtin_names()) {
    const auto s = cli::builtin_scenario(name);
    const auto a = cli::run_checks(s, {.points = 30, .seed = kSeed});
    const auto b = cli::run_checks(s, {.points = 30, .seed = kSeed, .threads = 1});
    if (cli::report_to_json(without_timing(a)) != cli::report_to_json(without_timing(b))) {
      ok = false;
      detail += " nondeterministic:" + name;
    }
    const auto text = cli::report_to_json(a).dump();
    if (cli::report_to_json(cli::report_from_json(cli::Json::parse(text))).dump() != text) {
      ok = false;
      detail += " round-trip:" + name;
    }
  }
  const std::string data = ECSK_TEST_DATA_DIR;
  const int pass = cli_status("check --builtin minkowski --points 10");
  const int fail = cli_status("check " + data + "/schwarzschild_perturbed.json --points 10");
  const int bad = cli_status("check " + data + "/omega_diagonal.json");
  if (pass != 0 || fail != 1 || bad != 2) ok = false;
  detail += " exit status pass=" + std::to_string(pass) + " fail=" + std::to_string(fail) +
            " invalid=" + std::to_string(bad);
  return {ok, detail.substr(1)};
}

struct Criterion {
  const char* name;
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"flat-space degeneration", flat_space},
      {"vacuum Schwarzschild", schwarzschild_vacuum},
      {"second Bianchi identity", second_bianchi},
      {"first Bianchi identity", first_bianchi},
      {"d_w^2 = F ^ (.)", d_squared},
      {"Levi-Civita solver", levi_civita},
      {"Leibniz form of the torsion equation", leibniz},
      {"rewritten left-hand sides", rewritten_lhs},
      {"conservation laws", conservation_laws},
      {"Lorentz covariance", lorentz_covariance},
      {"metric compatibility", metric_compatibility},
      {"jets vs finite differences", jets_vs_finite_differences},
      {"determinism and CLI contract", determinism_and_cli},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& ex) {
      out = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!out.pass) ++failures;
    std::printf("%s %2d %s: %s [%.1fs]\n", out.pass ? "PASS" : "FAIL", index, c.name, out.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
