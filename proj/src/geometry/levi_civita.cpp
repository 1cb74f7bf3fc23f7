#include "ecsk/geometry/levi_civita.hpp"

#include <string>
#include <vector>

#include "ecsk/geometry/linalg.hpp"

namespace ecsk::geometry {

MixedForm<Jet> levi_civita_at(const MixedForm<Jet>& e) {
  int order = exprkit::kMaxOrder;
  for (const Jet& j : e.data()) order = std::min(order, j.order());
  if (order < 1) throw exprkit::JetOrderError("Levi-Civita connection needs a tetrad jet of order >= 1");
  const int k = order - 1;

  constexpr int n = 24;
  std::vector<Jet> A(n * n, Jet(0.0).truncated(k));
  std::vector<Jet> rhs(n);

  // Row (a, mu < nu): sum over unknowns w^{pq}_rho of their coefficient in
  // w^{ab}_mu eta_bb e^b_nu - (mu <-> nu), equal to -(d_mu e^a_nu - d_nu e^a_mu).
  int row = 0;
  for (int a = 0; a < 4; ++a) {
    for (int mn : forms::sorted_tuples(2)) {
      const int mu = mn / 4;
      const int nu = mn % 4;
      rhs[row] = e.at(a, mu).derivative(nu) - e.at(a, nu).derivative(mu);
      for (int p = 0; p < 6; ++p) {
        const int pa = kPairs[p][0];
        const int pb = kPairs[p][1];
        // w^{a t} = +w^{pq} when (a, t) = (p, q), -w^{pq} when (a, t) = (q, p).
        int t = -1;
        int sg = 0;
        if (a == pa) {
          t = pb;
          sg = 1;
        } else if (a == pb) {
          t = pa;
          sg = -1;
        }
        if (sg == 0) continue;
        const double s = sg * forms::eta_diag(t);
        A[row * n + p * 4 + mu] += s * e.at(t, nu).truncated(k);
        A[row * n + p * 4 + nu] -= s * e.at(t, mu).truncated(k);
      }
      ++row;
    }
  }

  try {
    gauss_jordan(A, rhs, n, 1, 1e-300);
  } catch (const SingularMatrixError&) {
    throw SingularTetradError("Levi-Civita system is singular");
  }

  MixedForm<Jet> w(1, 2);
  for (int p = 0; p < 6; ++p) {
    for (int mu = 0; mu < 4; ++mu) w.at(kPairs[p][0] * 4 + kPairs[p][1], mu) = rhs[p * 4 + mu];
  }
  w.fill_images();
  return w;
}

FormEvaluator levi_civita_connection(FormEvaluator tetrad) {
  return [tetrad = std::move(tetrad)](const Point& x, int order) {
    if (order + 1 > exprkit::kMaxOrder) {
      throw exprkit::JetOrderError("Levi-Civita connection of order " + std::to_string(order) +
                                   " needs tetrad jets beyond order 3");
    }
    return levi_civita_at(tetrad(x, order + 1));
  };
}

}  // namespace ecsk::geometry
