#pragma once
// Scenario documents (JSON, schema version "1") and their validated form.
//
// {
//   "schema_version": "1",
//   "name": "schwarzschild",
//   "chart": {"coordinates": ["r", "th", "ph", "t"],
//             "bounds": [[3, 10], [0.5, 2.6], [0, 6.28], [-5, 5]]},
//   "parameters": {"M": 1},                          optional
//   "tetrad": [["e^0_r", "e^0_th", ...], ...],       4 x 4, row a, column mu
//   "connection": "levi-civita"
//               | {"kind": "explicit", "components": {"01": [4 entries], ...}}
//               | {"kind": "levi-civita+contorsion", "contorsion": {"01": [...], ...}},
//   "matter": {"mode": "vacuum" | "manufactured" | "explicit",
//              "T": 4 x 4, "Sigma": {"01": [4 entries over sigma], ...},
//              "kappa": real, "totally_antisymmetric_spin": bool,
//              "fault_epsilon": real},                optional, default vacuum
//   "lambda": real,                                   optional
//   "sampling": {"points": 100, "seed": 0},           optional
//   "tolerances": {"check-name": real},               optional
//   "skip_checks": ["check-name", ...],               optional
//   "max_jet_depth": 2                                optional
// }
//
// Entries are DSL strings or numbers. Pair keys "ab" name w^{ab}_mu; the key
// "ba" stands for -w^{ab}; giving both is an error, and a key "aa" is allowed
// only with all-zero entries. Missing pairs are zero.

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ecsk/fieldeqs/matter.hpp"
#include "ecsk/geometry/fields.hpp"

namespace ecsk::cli {

using Json = nlohmann::ordered_json;

class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ConnectionKind { Explicit, LeviCivita, LeviCivitaContorsion };

struct Scenario {
  Json document;  // as loaded, used for the digest and --dump
  std::string name;
  exprkit::Chart chart;
  exprkit::ParameterMap parameters{};
  std::vector<exprkit::Expression> tetrad{};    // a * 4 + mu
  ConnectionKind connection_kind = ConnectionKind::LeviCivita;
  std::vector<exprkit::Expression> connection{};  // pair * 4 + mu: w, or K for contorsion
  fieldeqs::MatterModel matter{};
  int points = 100;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, double>> tolerances{};
  std::vector<std::string> skip_checks{};
  int max_jet_depth = 2;

  geometry::FormEvaluator tetrad_evaluator() const;
  geometry::FormEvaluator connection_evaluator() const;
};

Scenario parse_scenario(const Json& document);
Scenario load_scenario(const std::filesystem::path& path);

// 64-bit FNV-1a of the compact document text, as 16 hex digits.
std::string scenario_digest(const Scenario& s);

}  // namespace ecsk::cli
