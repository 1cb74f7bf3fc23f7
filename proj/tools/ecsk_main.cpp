// ecsk check <scenario.json> [--points N] [--seed S] [--tol name=value ...]
//            [--checks a,b,c] [--json PATH] [--list-checks] [--builtin NAME [--dump]]
//
// Exit status: 0 all checks pass, 1 some check fails, 2 usage or input error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ecsk/cli/builtins.hpp"
#include "ecsk/cli/checks.hpp"
#include "ecsk/cli/report.hpp"

namespace {

std::pair<std::string, double> parse_tolerance(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw CLI::ValidationError("--tol", "expected name=value, got " + text);
  const std::string name = text.substr(0, eq);
  const std::string value = text.substr(eq + 1);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || value.empty()) throw CLI::ValidationError("--tol", "bad number in " + text);
  return {name, v};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tetrad-gravity residual checks on sampled points"};
  app.require_subcommand(1);
  auto* check = app.add_subcommand("check", "Run the checks of a scenario");

  std::string scenario_path;
  std::optional<int> points;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> tolerances;
  std::vector<std::string> checks;
  std::optional<std::string> json_path;
  std::optional<int> max_depth;
  int threads = 0;
  bool list_checks = false;
  bool dump = false;
  std::string builtin;

  check->add_option("scenario", scenario_path, "Scenario JSON file");
  check->add_option("--points", points, "Number of sample points (default 100)")->check(CLI::PositiveNumber);
  check->add_option("--seed", seed, "Sampling seed (default 0)");
  check->add_option("--tol", tolerances, "Tolerance override, name=value (repeatable)");
  check->add_option("--checks", checks, "Comma-separated checks to run")->delimiter(',');
  check->add_option("--json", json_path, "Also write the JSON report to PATH");
  check->add_option("--max-jet-depth", max_depth, "Cap on the derivative depth of the geometry")
      ->check(CLI::Range(0, 2));
  check->add_option("--threads", threads, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  check->add_flag("--list-checks", list_checks, "List the available checks and exit");
  check->add_option("--builtin", builtin, "Use a builtin scenario instead of a file")
      ->check(CLI::IsMember(ecsk::cli::builtin_names()));
  check->add_flag("--dump", dump, "With --builtin: print the scenario JSON and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (list_checks) {
      for (const auto& c : ecsk::cli::check_registry()) {
        std::cout << c.name << "  (tol " << c.tolerance << ", depth " << c.depth << ")  " << c.summary << "\n";
      }
      return 0;
    }
    if (builtin.empty() == scenario_path.empty()) {
      std::cerr << "error: give exactly one of a scenario file or --builtin NAME\n";
      return 2;
    }
    if (dump) {
      if (builtin.empty()) {
        std::cerr << "error: --dump needs --builtin NAME\n";
        return 2;
      }
      std::cout << ecsk::cli::builtin_document(builtin).dump(2) << "\n";
      return 0;
    }
    const auto scenario =
        builtin.empty() ? ecsk::cli::load_scenario(scenario_path) : ecsk::cli::builtin_scenario(builtin);

    ecsk::cli::RunOptions options;
    options.points = points;
    options.seed = seed;
    options.checks = checks;
    options.max_jet_depth = max_depth;
    options.threads = threads;
    for (const auto& t : tolerances) options.tolerances.push_back(parse_tolerance(t));

    const auto report = ecsk::cli::run_checks(scenario, options);
    ecsk::cli::emit_report(report, ecsk::cli::ReportFormat::Text, std::nullopt);
    if (json_path) ecsk::cli::emit_report(report, ecsk::cli::ReportFormat::Json, json_path);
    return report.pass ? 0 : 1;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
