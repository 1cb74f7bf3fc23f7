#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "ecsk/cli/builtins.hpp"
#include "ecsk/cli/checks.hpp"
#include "ecsk/cli/report.hpp"
#include "ecsk/cli/runner.hpp"
#include "ecsk/cli/scenario.hpp"

using namespace ecsk;
using namespace ecsk::cli;

namespace {

std::string load_error(const Json& doc) {
  try {
    (void)parse_scenario(doc);
  } catch (const ScenarioError& e) {
    return e.what();
  }
  FAIL("expected a scenario error");
  return {};
}

bool contains(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

Json zeroed_wall_time(const CheckReport& r) {
  CheckReport copy = r;
  copy.wall_time_seconds = 0.0;
  return report_to_json(copy);
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("ecsk_test_" + name);
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("minkowski builtin") {
    const auto s = builtin_scenario("minkowski");
    CHECK(s.connection_kind == ConnectionKind::Explicit);
    CHECK(s.matter.mode == fieldeqs::MatterMode::Vacuum);
    const auto e = s.tetrad_evaluator()({0.1, 0.2, 0.3, 0.4}, 1);
    for (int a = 0; a < 4; ++a)
      for (int m = 0; m < 4; ++m) CHECK(e.get({a}, {m}).value() == (a == m ? 1.0 : 0.0));
    CHECK(s.connection_evaluator()({0.1, 0.2, 0.3, 0.4}, 1).max_abs() == 0.0);
  }

  TEST_CASE("schwarzschild builtin uses the Levi-Civita connection") {
    const auto s = builtin_scenario("schwarzschild");
    CHECK(s.connection_kind == ConnectionKind::LeviCivita);
    CHECK(s.parameters.at("M") == 1.0);
    CHECK(s.chart.domain()[0] == exprkit::Interval{3, 10});
  }

  TEST_CASE("builtins round-trip through their documents") {
    for (const auto& name : builtin_names()) {
      const auto doc = builtin_document(name);
      const auto again = parse_scenario(Json::parse(doc.dump()));
      CHECK(scenario_digest(again) == scenario_digest(builtin_scenario(name)));
    }
    CHECK_THROWS_AS(builtin_scenario("nope"), ScenarioError);
  }

  TEST_CASE("schema errors") {
    auto doc = builtin_document("minkowski");
    doc["colour"] = "blue";
    CHECK(contains(load_error(doc), "unknown key \"colour\""));

    doc = builtin_document("minkowski");
    doc.erase("tetrad");
    CHECK(contains(load_error(doc), "missing required key \"tetrad\""));

    doc = builtin_document("minkowski");
    doc["schema_version"] = "2";
    CHECK(contains(load_error(doc), "schema_version"));

    doc = builtin_document("minkowski");
    doc["sampling"]["points"] = 0;
    CHECK(contains(load_error(doc), "sampling.points"));
  }

  TEST_CASE("parse errors name the tetrad entry") {
    auto doc = builtin_document("schwarzschild");
    doc["tetrad"][1][2] = "q*r";
    const auto msg = load_error(doc);
    CHECK(contains(msg, "e^1_ph"));
    CHECK(contains(msg, "q"));
  }

  TEST_CASE("diagonal connection entries must vanish") {
    auto doc = builtin_document("minkowski");
    doc["connection"]["components"]["00"] = Json::array({"0", "0", "0", "1"});
    CHECK(contains(load_error(doc), "constraint violation: omega^{00}_t"));
    doc["connection"]["components"]["00"] = Json::array({"0", "0", "0", "0"});
    CHECK_NOTHROW(parse_scenario(doc));
  }

  TEST_CASE("a pair may be given once") {
    auto doc = builtin_document("minkowski");
    doc["connection"]["components"]["12"] = Json::array({"x", "0", "0", "0"});
    doc["connection"]["components"]["21"] = Json::array({"0", "x", "0", "0"});
    CHECK(contains(load_error(doc), "twice"));
  }

  TEST_CASE("reversed pair keys are negated") {
    auto doc = builtin_document("minkowski");
    doc["connection"]["components"] = Json::object({{"21", Json::array({"0.5", "0", "0", "0"})}});
    const auto s = parse_scenario(doc);
    const auto w = s.connection_evaluator()({0, 0, 0, 0}, 0);
    CHECK(w.get({1, 2}, {0}).value() == -0.5);
    CHECK(w.get({2, 1}, {0}).value() == 0.5);
  }

  TEST_CASE("loading from files") {
    const auto good = write_temp("good.json", builtin_document("flrw").dump(2));
    CHECK(load_scenario(good).name == "flrw");
    const auto bad = write_temp("bad.json", "{ not json");
    CHECK_THROWS_AS(load_scenario(bad), ScenarioError);
    CHECK_THROWS_AS(load_scenario("/nonexistent/scenario.json"), ScenarioError);
  }

  TEST_CASE("sample points are seeded and stay inside the shrunk box") {
    const auto chart = builtin_scenario("schwarzschild").chart;
    const auto a = sample_points(chart, 500, 3);
    CHECK(a == sample_points(chart, 500, 3));
    CHECK(a != sample_points(chart, 500, 4));
    for (const auto& x : a)
      for (int m = 0; m < 4; ++m) {
        const auto [lo, hi] = chart.domain()[m];
        CHECK(x[m] >= lo + 0.01 * (hi - lo));
        CHECK(x[m] <= hi - 0.01 * (hi - lo));
      }
  }

  TEST_CASE("minkowski passes with residuals at rounding level") {
    const auto r = run_checks(builtin_scenario("minkowski"), {.points = 100});
    CHECK(r.pass);
    CHECK(r.checks.size() == check_registry().size());
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      CHECK(c.max_residual < 1e-12);
      CHECK(c.points == 100);
    }
  }

  TEST_CASE("reports are deterministic") {
    const auto s = builtin_scenario("schwarzschild");
    const auto a = run_checks(s, {.points = 100, .seed = 1});
    const auto b = run_checks(s, {.points = 100, .seed = 1});
    const auto serial = run_checks(s, {.points = 100, .seed = 1, .threads = 1});
    CHECK(zeroed_wall_time(a) == zeroed_wall_time(b));
    CHECK(zeroed_wall_time(a) == zeroed_wall_time(serial));
    const auto other = run_checks(s, {.points = 100, .seed = 2});
    CHECK(zeroed_wall_time(a) != zeroed_wall_time(other));
  }

  TEST_CASE("JSON report round-trips exactly") {
    const auto r = run_checks(builtin_scenario("random-fields"), {.points = 10});
    const auto j = report_to_json(r);
    CHECK(j["schema_version"] == "1");
    const auto back = report_from_json(Json::parse(j.dump()));
    REQUIRE(back.checks.size() == r.checks.size());
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
      CHECK(back.checks[i].name == r.checks[i].name);
      CHECK(back.checks[i].max_residual == r.checks[i].max_residual);
      CHECK(back.checks[i].mean_residual == r.checks[i].mean_residual);
      CHECK(back.checks[i].max_relative == r.checks[i].max_relative);
      CHECK(back.checks[i].tolerance == r.checks[i].tolerance);
      CHECK(back.checks[i].pass == r.checks[i].pass);
    }
    CHECK(back.wall_time_seconds == r.wall_time_seconds);
    CHECK(back.seed == r.seed);
    CHECK(back.digest == r.digest);
    CHECK(report_to_json(back) == j);
  }

  TEST_CASE("text report lists checks in declaration order") {
    const auto r = run_checks(builtin_scenario("minkowski"), {.points = 5, .checks = {"d-squared", "first-bianchi"}});
    REQUIRE(r.checks.size() == 2);
    CHECK(r.checks[0].name == "first-bianchi");
    CHECK(r.checks[1].name == "d-squared");
    const auto full = format_text(run_checks(builtin_scenario("minkowski"), {.points = 5}));
    std::size_t last = 0;
    for (const auto& c : check_registry()) {
      const auto at = full.find(c.name + " ");
      REQUIRE(at != std::string::npos);
      CHECK(at >= last);
      last = at;
    }
    CHECK(contains(full, "PASS"));
  }

  TEST_CASE("disabling checks leaves the others unchanged") {
    const auto s = builtin_scenario("flat-contorsion");
    const auto full = run_checks(s, {.points = 20, .seed = 5});
    const auto some = run_checks(s, {.points = 20, .seed = 5, .checks = {"second-bianchi", "einstein-equation",
                                                                       "conservation-component-spin"}});
    for (const auto& c : some.checks) {
      const auto it = std::find_if(full.checks.begin(), full.checks.end(), [&](auto& f) { return f.name == c.name; });
      REQUIRE(it != full.checks.end());
      CHECK(it->max_residual == c.max_residual);
      CHECK(it->mean_residual == c.mean_residual);
    }
  }

  TEST_CASE("builtins pass and together cover every check") {
    std::set<std::string> covered;
    for (const auto& name : builtin_names()) {
      CAPTURE(name);
      const auto r = run_checks(builtin_scenario(name), {.points = 10});
      CHECK(r.pass);
      for (const auto& c : r.checks) covered.insert(c.name);
    }
    for (const auto& c : check_registry()) CHECK(covered.count(c.name) == 1);
  }

  TEST_CASE("perturbed vacuum fails the Einstein check") {
    auto doc = builtin_document("schwarzschild");
    doc["tetrad"][3][3] = "sqrt(1 - 2*M/r) + 0.001";
    const auto r = run_checks(parse_scenario(doc), {.points = 20, .checks = {"einstein-equation"}});
    CHECK_FALSE(r.pass);
    CHECK(r.checks[0].max_residual > 1e-5);
  }

  TEST_CASE("point errors are recorded without aborting the run") {
    auto doc = builtin_document("minkowski");
    doc["tetrad"][0][0] = "1 + log(x + 1.5) - log(x + 1.5)";
    doc["tetrad"][1][1] = "1 + 0*log(x)";
    const auto r = run_checks(parse_scenario(doc), {.points = 20, .checks = {"metric-compatibility"}});
    CHECK_FALSE(r.pass);
    CHECK(r.checks[0].errors > 0);
    CHECK(r.checks[0].points > 0);
    CHECK(r.checks[0].errors + r.checks[0].points == 20);
    CHECK(!r.errors.empty());
    CHECK(contains(r.errors[0].message, "log"));
  }

  TEST_CASE("negative orientation is reported per point") {
    auto doc = builtin_document("minkowski");
    doc["tetrad"][0][0] = "-1";
    const auto r = run_checks(parse_scenario(doc), {.points = 3, .checks = {"first-bianchi"}});
    CHECK_FALSE(r.pass);
    CHECK(contains(r.errors.at(0).message, "orientation"));
  }

  TEST_CASE("jet depth cap and options are validated") {
    const auto s = builtin_scenario("minkowski");
    const auto capped = run_checks(s, {.points = 3, .checks = {"second-bianchi", "levi-civita-torsion"},
                                       .max_jet_depth = 0});
    CHECK_FALSE(capped.pass);
    CHECK(capped.checks[0].pass);
    CHECK(capped.checks[1].errors == 3);
    CHECK_THROWS_AS(run_checks(s, {.points = 3, .checks = {"no-such-check"}}), RunError);
    CHECK_THROWS_AS(run_checks(s, {.points = 0}), RunError);
    CHECK_THROWS_AS(run_checks(s, {.points = 3, .tolerances = {{"first-bianchi", -1.0}}}), RunError);
  }

  TEST_CASE("tolerance overrides decide the verdict") {
    auto doc = builtin_document("schwarzschild");
    doc["tetrad"][3][3] = "sqrt(1 - 2*M/r) + 0.001";
    const auto s = parse_scenario(doc);
    const auto r = run_checks(s, {.points = 5, .tolerances = {{"einstein-equation", 1.0}},
                                  .checks = {"einstein-equation"}});
    CHECK(r.pass);
    CHECK(r.checks[0].tolerance == 1.0);
  }
}
