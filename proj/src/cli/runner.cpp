#include "ecsk/cli/runner.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <random>
#include <thread>

#include "ecsk/cli/checks.hpp"
#include "ecsk/geometry/random_fields.hpp"

namespace ecsk::cli {

namespace {

struct Sample {
  bool ok = false;
  double residual = 0.0;
  double relative = 0.0;
  std::string error;
};

std::vector<const Check*> selected_checks(const Scenario& scenario, const RunOptions& options) {
  std::vector<const Check*> out;
  if (!options.checks.empty()) {
    for (const auto& name : options.checks) {
      if (!find_check(name)) throw RunError("unknown check \"" + name + "\"");
    }
    for (const auto& c : check_registry()) {
      if (std::find(options.checks.begin(), options.checks.end(), c.name) != options.checks.end()) out.push_back(&c);
    }
    return out;
  }
  for (const auto& name : scenario.skip_checks) {
    if (!find_check(name)) throw RunError("scenario skips unknown check \"" + name + "\"");
  }
  for (const auto& c : check_registry()) {
    if (std::find(scenario.skip_checks.begin(), scenario.skip_checks.end(), c.name) == scenario.skip_checks.end()) {
      out.push_back(&c);
    }
  }
  return out;
}

double tolerance_for(const Check& c, const Scenario& scenario, const RunOptions& options) {
  double tol = c.tolerance;
  for (const auto& [name, v] : scenario.tolerances) {
    if (name == c.name) tol = v;
  }
  for (const auto& [name, v] : options.tolerances) {
    if (name == c.name) tol = v;
  }
  return tol;
}

}  // namespace

std::vector<exprkit::Point> sample_points(const exprkit::Chart& chart, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<exprkit::Point> pts(static_cast<std::size_t>(n));
  for (auto& p : pts) {
    for (int mu = 0; mu < 4; ++mu) {
      const auto [lo, hi] = chart.domain()[mu];
      const double margin = 0.01 * (hi - lo);
      p[mu] = geometry::uniform(rng, lo + margin, hi - margin);
    }
  }
  return pts;
}

CheckReport run_checks(const Scenario& scenario, const RunOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& [name, v] : options.tolerances) {
    if (!find_check(name)) throw RunError("tolerance for unknown check \"" + name + "\"");
    if (!(v > 0.0)) throw RunError("tolerance for " + name + " must be positive");
  }
  for (const auto& [name, v] : scenario.tolerances) {
    if (!find_check(name)) throw RunError("scenario sets a tolerance for unknown check \"" + name + "\"");
  }
  const auto checks = selected_checks(scenario, options);
  const int n = options.points.value_or(scenario.points);
  if (n < 1) throw RunError("the number of points must be positive");
  const std::uint64_t seed = options.seed.value_or(scenario.seed);
  const int depth_cap = options.max_jet_depth.value_or(scenario.max_jet_depth);
  const auto points = sample_points(scenario.chart, n, seed);

  const auto tetrad = scenario.tetrad_evaluator();
  const auto connection = scenario.connection_evaluator();

  // samples[c * n + i]: check c at point i.
  std::vector<Sample> samples(checks.size() * points.size());
  const auto work = [&](std::size_t i) {
    PointContext ctx(scenario, tetrad, connection, points[i]);
    for (std::size_t c = 0; c < checks.size(); ++c) {
      Sample& s = samples[c * points.size() + i];
      if (checks[c]->depth > depth_cap) {
        s.error = "needs derivative depth " + std::to_string(checks[c]->depth) + ", above the cap of " +
                  std::to_string(depth_cap);
        continue;
      }
      try {
        const CheckValue v = checks[c]->evaluate(ctx);
        s.ok = true;
        s.residual = v.residual;
        s.relative = v.residual / v.scale;
      } catch (const std::exception& e) {
        s.error = e.what();
      }
    }
  };

  int threads = options.threads > 0 ? options.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, static_cast<int>(points.size()));
  if (threads == 1) {
    for (std::size_t i = 0; i < points.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = static_cast<std::size_t>(t); i < points.size(); i += static_cast<std::size_t>(threads)) {
          work(i);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  CheckReport report;
  report.scenario = scenario.name;
  report.digest = scenario_digest(scenario);
  report.points = n;
  report.seed = seed;
  report.pass = true;
  for (std::size_t c = 0; c < checks.size(); ++c) {
    CheckSummary s;
    s.name = checks[c]->name;
    s.tolerance = tolerance_for(*checks[c], scenario, options);
    double sum = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const Sample& smp = samples[c * points.size() + i];
      if (!smp.ok) {
        ++s.errors;
        report.errors.push_back({s.name, points[i], smp.error});
        continue;
      }
      ++s.points;
      sum += smp.residual;
      s.max_residual = std::max(s.max_residual, smp.residual);
      s.max_relative = std::max(s.max_relative, smp.relative);
    }
    s.mean_residual = s.points > 0 ? sum / s.points : 0.0;
    s.pass = s.errors == 0 && s.max_relative <= s.tolerance;
    report.pass = report.pass && s.pass;
    report.checks.push_back(s);
  }
  report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace ecsk::cli
