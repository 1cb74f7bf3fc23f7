#include "ecsk/cli/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace ecsk::cli {

Json report_to_json(const CheckReport& r) {
  Json j;
  j["schema_version"] = "1";
  j["scenario"] = r.scenario;
  j["scenario_digest"] = r.digest;
  j["points"] = r.points;
  j["seed"] = r.seed;
  j["pass"] = r.pass;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"points", c.points},
                      {"errors", c.errors},
                      {"max_residual", c.max_residual},
                      {"mean_residual", c.mean_residual},
                      {"max_relative", c.max_relative},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass}});
  }
  j["checks"] = checks;
  Json errors = Json::array();
  for (const auto& e : r.errors) {
    errors.push_back({{"check", e.check}, {"point", e.x}, {"message", e.message}});
  }
  j["errors"] = errors;
  j["wall_time_seconds"] = r.wall_time_seconds;
  return j;
}

CheckReport report_from_json(const Json& j) {
  if (j.at("schema_version") != "1") throw std::runtime_error("unsupported report schema_version");
  CheckReport r;
  r.scenario = j.at("scenario").get<std::string>();
  r.digest = j.at("scenario_digest").get<std::string>();
  r.points = j.at("points").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.pass = j.at("pass").get<bool>();
  for (const auto& c : j.at("checks")) {
    CheckSummary s;
    s.name = c.at("name").get<std::string>();
    s.points = c.at("points").get<int>();
    s.errors = c.at("errors").get<int>();
    s.max_residual = c.at("max_residual").get<double>();
    s.mean_residual = c.at("mean_residual").get<double>();
    s.max_relative = c.at("max_relative").get<double>();
    s.tolerance = c.at("tolerance").get<double>();
    s.pass = c.at("pass").get<bool>();
    r.checks.push_back(s);
  }
  for (const auto& e : j.at("errors")) {
    r.errors.push_back({e.at("check").get<std::string>(), e.at("point").get<exprkit::Point>(),
                        e.at("message").get<std::string>()});
  }
  r.wall_time_seconds = j.at("wall_time_seconds").get<double>();
  return r;
}

std::string format_text(const CheckReport& r) {
  std::size_t width = 5;
  for (const auto& c : r.checks) width = std::max(width, c.name.size());
  std::ostringstream out;
  out << "scenario " << r.scenario << " (digest " << r.digest << "), " << r.points << " points, seed " << r.seed
      << "\n\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-*s  %6s  %10s  %10s  %10s  %8s  %s\n", static_cast<int>(width), "check",
                "points", "max", "mean", "max/scale", "tol", "result");
  out << line;
  for (const auto& c : r.checks) {
    std::snprintf(line, sizeof line, "%-*s  %6d  %10.3e  %10.3e  %10.3e  %8.1e  %s\n", static_cast<int>(width),
                  c.name.c_str(), c.points, c.max_residual, c.mean_residual, c.max_relative, c.tolerance,
                  c.pass ? "PASS" : "FAIL");
    out << line;
  }
  if (!r.errors.empty()) {
    out << "\n" << r.errors.size() << " point error(s):\n";
    for (const auto& e : r.errors) {
      out << "  " << e.check << " at " << exprkit::format_point(e.x) << ": " << e.message << "\n";
    }
  }
  std::snprintf(line, sizeof line, "\n%s in %.2f s\n", r.pass ? "PASS" : "FAIL", r.wall_time_seconds);
  out << line;
  return out.str();
}

void emit_report(const CheckReport& report, ReportFormat format, const std::optional<std::string>& path) {
  const std::string text = format == ReportFormat::Json ? report_to_json(report).dump(2) + "\n" : format_text(report);
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*path);
  if (!out) throw std::runtime_error("cannot write " + *path);
  out << text;
  if (!out) throw std::runtime_error("failed writing " + *path);
}

}  // namespace ecsk::cli
