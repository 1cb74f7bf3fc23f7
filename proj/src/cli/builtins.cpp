#include "ecsk/cli/builtins.hpp"

#include "ecsk/forms/forms.hpp"
#include "ecsk/geometry/random_fields.hpp"

namespace ecsk::cli {

namespace {

Json identity_tetrad() {
  return Json::array({Json::array({"1", "0", "0", "0"}), Json::array({"0", "1", "0", "0"}),
                      Json::array({"0", "0", "1", "0"}), Json::array({"0", "0", "0", "1"})});
}

Json header(const char* name, const char* description) {
  Json j;
  j["schema_version"] = "1";
  j["name"] = name;
  j["description"] = description;
  return j;
}

Json box_chart(double t_lo, double t_hi) {
  return {{"coordinates", {"x", "y", "z", "t"}},
          {"bounds", Json::array({Json::array({-1.0, 1.0}), Json::array({-1.0, 1.0}), Json::array({-1.0, 1.0}),
                                  Json::array({t_lo, t_hi})})}};
}

Json minkowski() {
  Json j = header("minkowski", "Identity tetrad with a vanishing explicit connection, vacuum.");
  j["chart"] = box_chart(-1.0, 1.0);
  j["tetrad"] = identity_tetrad();
  Json comps = Json::object();
  for (const char* p : {"01", "02", "03", "12", "13", "23"}) comps[p] = {"0", "0", "0", "0"};
  j["connection"] = {{"kind", "explicit"}, {"components", comps}};
  j["matter"] = {{"mode", "vacuum"}};
  return j;
}

Json flat_polar() {
  Json j = header("flat-polar", "Flat space in polar coordinates on the (r, th) plane, Levi-Civita connection.");
  j["chart"] = {{"coordinates", {"x", "r", "th", "t"}},
                {"bounds", Json::array({Json::array({-1.0, 1.0}), Json::array({0.5, 3.0}), Json::array({-3.0, 3.0}),
                                        Json::array({-1.0, 1.0})})}};
  j["tetrad"] = Json::array({Json::array({"1", "0", "0", "0"}), Json::array({"0", "1", "0", "0"}),
                             Json::array({"0", "0", "r", "0"}), Json::array({"0", "0", "0", "1"})});
  j["connection"] = "levi-civita";
  j["matter"] = {{"mode", "vacuum"}};
  return j;
}

Json schwarzschild() {
  Json j = header("schwarzschild", "Schwarzschild exterior in Schwarzschild coordinates, Levi-Civita connection.");
  j["chart"] = {{"coordinates", {"r", "th", "ph", "t"}},
                {"bounds", Json::array({Json::array({3.0, 10.0}), Json::array({0.5, 2.6}), Json::array({0.0, 6.28}),
                                        Json::array({-5.0, 5.0})})}};
  j["parameters"] = {{"M", 1.0}};
  j["tetrad"] = Json::array({Json::array({"1/sqrt(1 - 2*M/r)", "0", "0", "0"}), Json::array({"0", "r", "0", "0"}),
                             Json::array({"0", "0", "r*sin(th)", "0"}),
                             Json::array({"0", "0", "0", "sqrt(1 - 2*M/r)"})});
  j["connection"] = "levi-civita";
  j["matter"] = {{"mode", "vacuum"}};
  return j;
}

Json flrw() {
  Json j = header("flrw", "Spatially flat FLRW with a(t) = a0 t^p, Levi-Civita connection, manufactured matter.");
  j["chart"] = box_chart(0.5, 2.0);
  j["parameters"] = {{"a0", 1.0}, {"p", 2.0 / 3.0}};
  j["tetrad"] = Json::array({Json::array({"a0*t^p", "0", "0", "0"}), Json::array({"0", "a0*t^p", "0", "0"}),
                             Json::array({"0", "0", "a0*t^p", "0"}), Json::array({"0", "0", "0", "1"})});
  j["connection"] = "levi-civita";
  j["matter"] = {{"mode", "manufactured"}};
  return j;
}

Json flat_contorsion() {
  Json j = header("flat-contorsion",
                  "Identity tetrad with a constant totally antisymmetric (axial) contorsion, manufactured matter.");
  j["chart"] = box_chart(-1.0, 1.0);
  j["tetrad"] = identity_tetrad();
  // K_{ab mu} = eps_{ab mu d} n^d, internal indices raised with eta.
  constexpr double n[4] = {0.3, -0.2, 0.5, 0.4};
  Json k = Json::object();
  for (const auto& [a, b] : geometry::kPairs) {
    Json row = Json::array();
    for (int mu = 0; mu < 4; ++mu) {
      double v = 0.0;
      for (int d = 0; d < 4; ++d) v += forms::epsilon(a, b, mu, d) * n[d];
      row.push_back(v * forms::eta_diag(a) * forms::eta_diag(b));
    }
    k[std::to_string(a) + std::to_string(b)] = row;
  }
  j["connection"] = {{"kind", "levi-civita+contorsion"}, {"contorsion", k}};
  j["matter"] = {{"mode", "manufactured"}, {"totally_antisymmetric_spin", true}};
  return j;
}

Json random_fields() {
  Json j = header("random-fields",
                  "Seeded polynomial tetrad and connection with generic torsion, manufactured matter. The standard "
                  "component conservation laws hold only for vanishing or totally antisymmetric torsion, so they are "
                  "skipped here; the general component laws run instead.");
  j["chart"] = box_chart(-1.0, 1.0);
  const auto chart = geometry::unit_box_chart();
  const auto text = geometry::random_field_text(7, chart);
  Json tetrad = Json::array();
  for (int a = 0; a < 4; ++a) {
    Json row = Json::array();
    for (int mu = 0; mu < 4; ++mu) row.push_back(text.tetrad[a * 4 + mu]);
    tetrad.push_back(row);
  }
  j["tetrad"] = tetrad;
  Json comps = Json::object();
  for (int p = 0; p < 6; ++p) {
    Json row = Json::array();
    for (int mu = 0; mu < 4; ++mu) row.push_back(text.connection[p * 4 + mu]);
    comps[std::to_string(geometry::kPairs[p][0]) + std::to_string(geometry::kPairs[p][1])] = row;
  }
  j["connection"] = {{"kind", "explicit"}, {"components", comps}};
  j["matter"] = {{"mode", "manufactured"}};
  j["skip_checks"] = {"conservation-component-momentum", "conservation-component-spin"};
  return j;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"minkowski", "flat-polar",      "schwarzschild",
                                              "flrw",      "flat-contorsion", "random-fields"};
  return names;
}

Json builtin_document(std::string_view name) {
  if (name == "minkowski") return minkowski();
  if (name == "flat-polar") return flat_polar();
  if (name == "schwarzschild") return schwarzschild();
  if (name == "flrw") return flrw();
  if (name == "flat-contorsion") return flat_contorsion();
  if (name == "random-fields") return random_fields();
  throw ScenarioError("unknown builtin scenario \"" + std::string(name) + "\"");
}

Scenario builtin_scenario(std::string_view name) { return parse_scenario(builtin_document(name)); }

}  // namespace ecsk::cli
