#pragma once
// Seeded sampling and check orchestration.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ecsk/cli/scenario.hpp"

namespace ecsk::cli {

struct RunOptions {
  std::optional<int> points;
  std::optional<std::uint64_t> seed;
  std::vector<std::pair<std::string, double>> tolerances;  // override scenario and defaults
  std::vector<std::string> checks;                         // empty: every check the scenario does not skip
  std::optional<int> max_jet_depth;
  int threads = 0;  // 0: hardware concurrency
};

struct PointError {
  std::string check;
  exprkit::Point x{};
  std::string message;
};

struct CheckSummary {
  std::string name;
  int points = 0;  // points evaluated without error
  double max_residual = 0.0;
  double mean_residual = 0.0;
  double max_relative = 0.0;  // max of residual / scale
  double tolerance = 0.0;
  int errors = 0;
  bool pass = false;
};

struct CheckReport {
  std::string scenario;
  std::string digest;
  int points = 0;
  std::uint64_t seed = 0;
  std::vector<CheckSummary> checks;
  std::vector<PointError> errors;
  bool pass = false;
  double wall_time_seconds = 0.0;
};

class RunError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Uniform points in the chart box shrunk by 1% of each side's length.
std::vector<exprkit::Point> sample_points(const exprkit::Chart& chart, int n, std::uint64_t seed);

// A check passes when every point evaluates and residual <= tolerance * scale.
CheckReport run_checks(const Scenario& scenario, const RunOptions& options = {});

}  // namespace ecsk::cli
