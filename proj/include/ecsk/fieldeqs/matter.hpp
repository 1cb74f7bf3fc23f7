#pragma once
// Matter sources in component form: T_{mu nu} and Sigma_{mu nu}^sigma.

#include <optional>
#include <stdexcept>
#include <vector>

#include "ecsk/geometry/point_geometry.hpp"

namespace ecsk::fieldeqs {

using exprkit::Expression;
using exprkit::Jet;
using forms::Tensor;
using geometry::PointGeometry;

class MatterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class MatterMode { Vacuum, Explicit, Manufactured };

// kappa for the form-level equations when a model does not override it.
double default_kappa();

struct MatterModel {
  MatterMode mode = MatterMode::Vacuum;
  // Explicit mode only. T: entry mu * 4 + nu. Sigma: entry pair * 4 + sigma
  // for the pair mu < nu (ordered as geometry::kPairs).
  std::vector<Expression> T;
  std::vector<Expression> Sigma;
  std::optional<double> kappa;
  double lambda = 0.0;
  // Requires Sigma_{mu nu sigma} (last index lowered) and Q_{mu nu sigma} to
  // be totally antisymmetric.
  bool totally_antisymmetric_spin = false;
  // Adds epsilon * P to T for a fixed smooth P that no geometry conserves.
  double fault_epsilon = 0.0;

  double effective_kappa() const { return kappa ? *kappa : default_kappa(); }
};

MatterModel vacuum_matter();
MatterModel manufactured_matter();
MatterModel explicit_matter(std::vector<Expression> T, std::vector<Expression> Sigma);

struct MatterFields {
  Tensor<Jet> T;      // T_{mu nu}
  Tensor<Jet> Sigma;  // Sigma_{mu nu}^sigma
};

// Jets of the sources at pg.x, with the derivative depth of pg's curvature.
// Manufactured mode: T = G / 8 pi and Sigma = -Q / 16 pi.
MatterFields evaluate_matter(const MatterModel& model, const PointGeometry& pg);

// The fault-injection tensor P_{mu nu} at x.
Tensor<Jet> fault_tensor(const exprkit::Point& x, int order);

// Largest violation of total antisymmetry of t_{mu nu}^sigma once sigma is
// lowered with g.
double total_antisymmetry_defect(const Tensor<Jet>& t, const forms::Matrix4<Jet>& g);

// M_{kl}^m = S_{kl}^m + delta^m_k S_{lr}^r - delta^m_l S_{kr}^r.
Tensor<Jet> trace_completion(const Tensor<Jet>& s);

}  // namespace ecsk::fieldeqs
