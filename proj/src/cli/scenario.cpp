#include "ecsk/cli/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "ecsk/exprkit/parser.hpp"
#include "ecsk/geometry/levi_civita.hpp"

namespace ecsk::cli {

using exprkit::Chart;
using exprkit::Expression;

namespace {

void require_object(const Json& j, const std::string& where) {
  if (!j.is_object()) throw ScenarioError(where + " must be an object");
}

void reject_unknown_keys(const Json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ScenarioError("unknown key \"" + key + "\" in " + where);
  }
}

const Json& required(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw ScenarioError("missing required key \"" + std::string(key) + "\" in " + where);
  return j.at(key);
}

double number(const Json& j, const std::string& where) {
  if (!j.is_number()) throw ScenarioError(where + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ScenarioError(where + " must be finite");
  return v;
}

std::string entry_text(const Json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number()) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
    return buf;
  }
  throw ScenarioError(where + " must be a string or a number");
}

Expression expression(const Json& j, const std::string& where, const Chart& chart,
                      const exprkit::ParameterMap& params) {
  const std::string text = entry_text(j, where);
  try {
    return exprkit::parse_expression(text, chart, params);
  } catch (const exprkit::ParseError& e) {
    throw ScenarioError(where + ": " + e.what() + " in \"" + text + "\"");
  }
}

bool is_zero_constant(const Expression& e) {
  return e.root().op == exprkit::Op::Constant && e.root().value == 0.0;
}

Chart parse_chart(const Json& j) {
  require_object(j, "chart");
  reject_unknown_keys(j, "chart", {"coordinates", "bounds"});
  const Json& names = required(j, "coordinates", "chart");
  const Json& bounds = required(j, "bounds", "chart");
  if (!names.is_array() || names.size() != 4) throw ScenarioError("chart.coordinates must list 4 names");
  if (!bounds.is_array() || bounds.size() != 4) throw ScenarioError("chart.bounds must list 4 intervals");
  std::array<std::string, 4> n;
  std::array<exprkit::Interval, 4> d;
  for (int i = 0; i < 4; ++i) {
    if (!names[i].is_string()) throw ScenarioError("chart.coordinates entries must be strings");
    n[i] = names[i].get<std::string>();
    const Json& b = bounds[i];
    const std::string where = "chart.bounds[" + std::to_string(i) + "]";
    if (!b.is_array() || b.size() != 2) throw ScenarioError(where + " must be [lo, hi]");
    d[i] = {number(b[0], where), number(b[1], where)};
  }
  try {
    return Chart(n, d);
  } catch (const exprkit::ChartError& e) {
    throw ScenarioError(std::string("chart: ") + e.what());
  }
}

std::vector<Expression> parse_tetrad(const Json& j, const Chart& chart, const exprkit::ParameterMap& params) {
  if (!j.is_array() || j.size() != 4) throw ScenarioError("tetrad must be a 4 x 4 array (rows a, columns mu)");
  std::vector<Expression> out;
  for (int a = 0; a < 4; ++a) {
    if (!j[a].is_array() || j[a].size() != 4) {
      throw ScenarioError("tetrad row " + std::to_string(a) + " must have 4 entries");
    }
    for (int mu = 0; mu < 4; ++mu) {
      const std::string where = "tetrad entry e^" + std::to_string(a) + "_" + chart.coord_names()[mu];
      out.push_back(expression(j[a][mu], where, chart, params));
    }
  }
  return out;
}

// Antisymmetric pair fields keyed by "ab": w^{ab}_mu or Sigma_{ab}^sigma.
std::vector<Expression> parse_pairs(const Json& j, const std::string& where, const std::string& symbol,
                                    bool upper_pair, const Chart& chart, const exprkit::ParameterMap& params) {
  require_object(j, where);
  const auto label = [&](int a, int b, int slot) {
    const std::string pair = std::to_string(a) + std::to_string(b);
    const std::string last = chart.coord_names()[slot];
    return upper_pair ? symbol + "^{" + pair + "}_" + last : symbol + "_{" + pair + "}^" + last;
  };
  std::vector<Expression> out(24, Expression::constant(0.0, chart));
  std::set<int> seen;
  for (const auto& [key, value] : j.items()) {
    if (key.size() != 2 || key[0] < '0' || key[0] > '3' || key[1] < '0' || key[1] > '3') {
      throw ScenarioError("invalid pair key \"" + key + "\" in " + where + " (expected two digits 0-3)");
    }
    const int a = key[0] - '0';
    const int b = key[1] - '0';
    if (!value.is_array() || value.size() != 4) {
      throw ScenarioError(where + " entry \"" + key + "\" must list 4 components");
    }
    if (a == b) {
      for (int mu = 0; mu < 4; ++mu) {
        const Expression e = expression(value[mu], where + " entry " + label(a, b, mu), chart, params);
        if (!is_zero_constant(e)) {
          throw ScenarioError("constraint violation: " + label(a, b, mu) + " must vanish (antisymmetric pair)");
        }
      }
      continue;
    }
    const int p = geometry::pair_index(a, b);
    if (!seen.insert(p).second) {
      throw ScenarioError(where + " gives the pair " + std::to_string(std::min(a, b)) + std::to_string(std::max(a, b)) +
                          " twice (as \"ab\" and \"ba\")");
    }
    for (int mu = 0; mu < 4; ++mu) {
      Expression e = expression(value[mu], where + " entry " + label(a, b, mu), chart, params);
      if (a > b) {
        auto neg = std::make_shared<exprkit::Node>();
        neg->op = exprkit::Op::Neg;
        neg->args = {e.root_ptr()};
        e = Expression(neg, chart);
      }
      out[p * 4 + mu] = e;
    }
  }
  return out;
}

fieldeqs::MatterModel parse_matter(const Json& j, const Chart& chart, const exprkit::ParameterMap& params) {
  require_object(j, "matter");
  reject_unknown_keys(j, "matter", {"mode", "T", "Sigma", "kappa", "totally_antisymmetric_spin", "fault_epsilon"});
  const Json& mode = required(j, "mode", "matter");
  if (!mode.is_string()) throw ScenarioError("matter.mode must be a string");
  const std::string m = mode.get<std::string>();
  fieldeqs::MatterModel model;
  if (m == "vacuum") {
    model = fieldeqs::vacuum_matter();
  } else if (m == "manufactured") {
    model = fieldeqs::manufactured_matter();
  } else if (m == "explicit") {
    const Json& t = required(j, "T", "explicit matter");
    if (!t.is_array() || t.size() != 4) throw ScenarioError("matter.T must be a 4 x 4 array");
    std::vector<Expression> T;
    for (int mu = 0; mu < 4; ++mu) {
      if (!t[mu].is_array() || t[mu].size() != 4) throw ScenarioError("matter.T rows must have 4 entries");
      for (int nu = 0; nu < 4; ++nu) {
        const std::string where =
            "matter entry T_{" + chart.coord_names()[mu] + " " + chart.coord_names()[nu] + "}";
        T.push_back(expression(t[mu][nu], where, chart, params));
      }
    }
    std::vector<Expression> S(24, Expression::constant(0.0, chart));
    if (j.contains("Sigma")) S = parse_pairs(j.at("Sigma"), "matter.Sigma", "Sigma", false, chart, params);
    model = fieldeqs::explicit_matter(std::move(T), std::move(S));
  } else {
    throw ScenarioError("matter.mode must be \"vacuum\", \"manufactured\" or \"explicit\"");
  }
  if (m != "explicit" && (j.contains("T") || j.contains("Sigma"))) {
    throw ScenarioError("matter.T and matter.Sigma are only allowed in explicit mode");
  }
  if (j.contains("kappa")) model.kappa = number(j.at("kappa"), "matter.kappa");
  if (j.contains("fault_epsilon")) model.fault_epsilon = number(j.at("fault_epsilon"), "matter.fault_epsilon");
  if (j.contains("totally_antisymmetric_spin")) {
    if (!j.at("totally_antisymmetric_spin").is_boolean()) {
      throw ScenarioError("matter.totally_antisymmetric_spin must be a boolean");
    }
    model.totally_antisymmetric_spin = j.at("totally_antisymmetric_spin").get<bool>();
  }
  return model;
}

}  // namespace

Scenario parse_scenario(const Json& doc) {
  require_object(doc, "scenario");
  reject_unknown_keys(doc, "scenario",
                      {"schema_version", "name", "description", "chart", "parameters", "tetrad", "connection", "matter",
                       "lambda", "sampling", "tolerances", "skip_checks", "max_jet_depth"});
  const Json& version = required(doc, "schema_version", "scenario");
  if (version != "1") throw ScenarioError("unsupported schema_version (expected \"1\")");
  const Json& name = required(doc, "name", "scenario");
  if (!name.is_string()) throw ScenarioError("name must be a string");

  Scenario s{.document = doc, .name = name.get<std::string>(), .chart = parse_chart(required(doc, "chart", "scenario"))};

  if (doc.contains("parameters")) {
    const Json& p = doc.at("parameters");
    require_object(p, "parameters");
    for (const auto& [key, value] : p.items()) {
      if (s.chart.coordinate_index(key) >= 0) throw ScenarioError("parameter \"" + key + "\" shadows a coordinate");
      s.parameters[key] = number(value, "parameter " + key);
    }
  }

  s.tetrad = parse_tetrad(required(doc, "tetrad", "scenario"), s.chart, s.parameters);

  const Json& conn = required(doc, "connection", "scenario");
  std::string kind;
  if (conn.is_string()) {
    kind = conn.get<std::string>();
  } else {
    require_object(conn, "connection");
    reject_unknown_keys(conn, "connection", {"kind", "components", "contorsion"});
    const Json& k = required(conn, "kind", "connection");
    if (!k.is_string()) throw ScenarioError("connection.kind must be a string");
    kind = k.get<std::string>();
  }
  if (kind == "levi-civita") {
    s.connection_kind = ConnectionKind::LeviCivita;
    if (conn.is_object() && (conn.contains("components") || conn.contains("contorsion"))) {
      throw ScenarioError("a levi-civita connection takes no components");
    }
  } else if (kind == "explicit") {
    if (!conn.is_object()) throw ScenarioError("an explicit connection needs components");
    s.connection_kind = ConnectionKind::Explicit;
    s.connection = parse_pairs(required(conn, "components", "connection"), "connection.components", "omega", true,
                               s.chart, s.parameters);
  } else if (kind == "levi-civita+contorsion") {
    if (!conn.is_object()) throw ScenarioError("a contorsion connection needs a contorsion field");
    s.connection_kind = ConnectionKind::LeviCivitaContorsion;
    s.connection = parse_pairs(required(conn, "contorsion", "connection"), "connection.contorsion", "K", true, s.chart,
                               s.parameters);
  } else {
    throw ScenarioError("connection must be \"levi-civita\", \"explicit\" or \"levi-civita+contorsion\"");
  }

  if (doc.contains("matter")) s.matter = parse_matter(doc.at("matter"), s.chart, s.parameters);
  if (doc.contains("lambda")) s.matter.lambda = number(doc.at("lambda"), "lambda");

  if (doc.contains("sampling")) {
    const Json& smp = doc.at("sampling");
    require_object(smp, "sampling");
    reject_unknown_keys(smp, "sampling", {"points", "seed"});
    if (smp.contains("points")) {
      if (!smp.at("points").is_number_integer() || smp.at("points").get<long long>() < 1) {
        throw ScenarioError("sampling.points must be a positive integer");
      }
      s.points = smp.at("points").get<int>();
    }
    if (smp.contains("seed")) {
      if (!smp.at("seed").is_number_integer() || smp.at("seed").get<long long>() < 0) {
        throw ScenarioError("sampling.seed must be a non-negative integer");
      }
      s.seed = smp.at("seed").get<std::uint64_t>();
    }
  }
  if (doc.contains("tolerances")) {
    const Json& t = doc.at("tolerances");
    require_object(t, "tolerances");
    for (const auto& [key, value] : t.items()) {
      const double v = number(value, "tolerance " + key);
      if (v <= 0.0) throw ScenarioError("tolerance " + key + " must be positive");
      s.tolerances.emplace_back(key, v);
    }
  }
  if (doc.contains("skip_checks")) {
    const Json& k = doc.at("skip_checks");
    if (!k.is_array()) throw ScenarioError("skip_checks must be an array of names");
    for (const auto& v : k) {
      if (!v.is_string()) throw ScenarioError("skip_checks must be an array of names");
      s.skip_checks.push_back(v.get<std::string>());
    }
  }
  if (doc.contains("max_jet_depth")) {
    const Json& d = doc.at("max_jet_depth");
    if (!d.is_number_integer() || d.get<int>() < 0 || d.get<int>() > 2) {
      throw ScenarioError("max_jet_depth must be 0, 1 or 2");
    }
    s.max_jet_depth = d.get<int>();
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ScenarioError(path.string() + ": " + e.what());
  }
  return parse_scenario(doc);
}

std::string scenario_digest(const Scenario& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s.document.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

geometry::FormEvaluator Scenario::tetrad_evaluator() const { return geometry::TetradField(tetrad).evaluator(); }

geometry::FormEvaluator Scenario::connection_evaluator() const {
  switch (connection_kind) {
    case ConnectionKind::Explicit:
      return geometry::SpinConnectionField(connection).evaluator();
    case ConnectionKind::LeviCivita:
      return geometry::levi_civita_connection(tetrad_evaluator());
    case ConnectionKind::LeviCivitaContorsion:
      return geometry::apply_contorsion(geometry::levi_civita_connection(tetrad_evaluator()),
                                        geometry::SpinConnectionField(connection).evaluator());
  }
  throw ScenarioError("unknown connection kind");
}

}  // namespace ecsk::cli
