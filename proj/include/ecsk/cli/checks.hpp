#pragma once
// The registry of per-point checks, in report order.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ecsk/cli/scenario.hpp"
#include "ecsk/fieldeqs/field_equations.hpp"

namespace ecsk::cli {

// Per-point evaluation state shared by the checks: geometry and matter are
// computed once per derivative depth and reused.
class PointContext {
 public:
  PointContext(const Scenario& scenario, const geometry::FormEvaluator& tetrad,
               const geometry::FormEvaluator& connection, const exprkit::Point& x);

  const Scenario& scenario() const { return scenario_; }
  const exprkit::Point& x() const { return x_; }
  const geometry::FormEvaluator& tetrad() const { return tetrad_; }
  const geometry::FormEvaluator& connection() const { return connection_; }

  // Throws ScenarioError when det e is not positive.
  const geometry::PointGeometry& geometry(int depth);
  const fieldeqs::MatterFields& matter(int depth);
  const fieldeqs::FormMatter& form_matter(int depth);

  // max(1, |e|, |w|, |F|, |Theta|) at the point.
  double field_scale(int depth);

 private:
  struct Level {
    std::unique_ptr<geometry::PointGeometry> geometry;
    std::unique_ptr<fieldeqs::MatterFields> matter;
    std::unique_ptr<fieldeqs::FormMatter> form_matter;
  };

  const Scenario& scenario_;
  const geometry::FormEvaluator& tetrad_;
  const geometry::FormEvaluator& connection_;
  exprkit::Point x_;
  std::map<int, Level> levels_;
};

struct CheckValue {
  double residual = 0.0;  // max-abs of the residual tensor
  double scale = 1.0;     // the tolerance is multiplied by this
};

struct Check {
  std::string name;
  std::string summary;
  int depth = 0;  // derivative depth of the geometry the check needs
  double tolerance = 0.0;
  std::function<CheckValue(PointContext&)> evaluate;
};

const std::vector<Check>& check_registry();
const Check* find_check(const std::string& name);

}  // namespace ecsk::cli
