#pragma once
// Helpers shared by the unit tests and the acceptance binary.

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "ecsk/exprkit/finite_difference.hpp"
#include "ecsk/exprkit/parser.hpp"
#include "ecsk/geometry/fields.hpp"
#include "ecsk/geometry/point_geometry.hpp"
#include "ecsk/geometry/random_fields.hpp"

namespace ecsk::test {

using exprkit::Chart;
using exprkit::Jet;
using exprkit::ParameterMap;
using exprkit::Point;
using geometry::FormEvaluator;

inline std::vector<exprkit::Expression> parse_all(const std::vector<std::string>& text, const Chart& chart,
                                                  const ParameterMap& params = {}) {
  std::vector<exprkit::Expression> out;
  for (const auto& s : text) out.push_back(exprkit::parse_expression(s, chart, params));
  return out;
}

inline FormEvaluator tetrad_from(const std::vector<std::string>& text, const Chart& chart,
                                 const ParameterMap& params = {}) {
  return geometry::TetradField(parse_all(text, chart, params)).evaluator();
}

// 24 entries, pair * 4 + mu.
inline FormEvaluator connection_from(const std::vector<std::string>& text, const Chart& chart,
                                     const ParameterMap& params = {}) {
  return geometry::SpinConnectionField(parse_all(text, chart, params)).evaluator();
}

inline FormEvaluator zero_connection(const Chart& chart) {
  return geometry::SpinConnectionField::zero(chart).evaluator();
}

inline const std::vector<std::string>& identity_tetrad_text() {
  static const std::vector<std::string> t{"1", "0", "0", "0", "0", "1", "0", "0",
                                          "0", "0", "1", "0", "0", "0", "0", "1"};
  return t;
}

inline Chart schwarzschild_chart() {
  return Chart({"r", "th", "ph", "t"}, {{{3, 10}, {0.5, 2.6}, {0, 6.28}, {-5, 5}}});
}

inline const std::vector<std::string>& schwarzschild_tetrad_text() {
  static const std::vector<std::string> t{"1/sqrt(1 - 2*M/r)", "0", "0", "0", "0", "r", "0", "0",
                                          "0", "0", "r*sin(th)", "0", "0", "0", "0", "sqrt(1 - 2*M/r)"};
  return t;
}

inline Point random_point(std::mt19937_64& rng, const Chart& chart, double margin = 0.01) {
  Point x{};
  for (int mu = 0; mu < 4; ++mu) {
    const auto [lo, hi] = chart.domain()[mu];
    const double pad = margin * (hi - lo);
    x[mu] = geometry::uniform(rng, lo + pad, hi - pad);
  }
  return x;
}

inline forms::Matrix4<double> metric_values(const FormEvaluator& e, const Point& x) {
  const auto m = geometry::metric_from_tetrad(e(x, 0));
  forms::Matrix4<double> g{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) g[a][b] = m.g[a][b].value();
  return g;
}

// Gamma^s_{mn} from central differences of g; symmetric in (m, n).
inline double fd_christoffel(const FormEvaluator& e, const Point& x, int s, int m, int n, double h = 1e-5) {
  forms::Matrix4<double> dg[4];
  for (int l = 0; l < 4; ++l) {
    Point p = x, q = x;
    p[l] += h;
    q[l] -= h;
    const auto gp = metric_values(e, p);
    const auto gq = metric_values(e, q);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) dg[l][a][b] = (gp[a][b] - gq[a][b]) / (2 * h);
  }
  const auto gi = geometry::metric_from_tetrad(e(x, 0)).g_inv;
  double acc = 0.0;
  for (int l = 0; l < 4; ++l) acc += 0.5 * gi[s][l].value() * (dg[m][l][n] + dg[n][l][m] - dg[l][m][n]);
  return acc;
}

// R_{abcd} R^{abcd} with all indices moved by g.
inline double kretschmann(const geometry::PointGeometry& pg) {
  const auto& R = pg.curvature.riemann;
  const auto& g = pg.metric.g;
  const auto& gi = pg.metric.g_inv;
  double low[4][4][4][4] = {};
  double up[4][4][4][4] = {};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double acc = 0.0;
          for (int s = 0; s < 4; ++s) acc += R({a, b, c, s}).value() * g[s][d].value();
          low[a][b][c][d] = acc;
        }
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double acc = 0.0;
          for (int p = 0; p < 4; ++p)
            for (int q = 0; q < 4; ++q)
              for (int r = 0; r < 4; ++r)
                for (int s = 0; s < 4; ++s)
                  acc += gi[a][p].value() * gi[b][q].value() * gi[c][r].value() * gi[d][s].value() *
                         low[p][q][r][s];
          up[a][b][c][d] = acc;
        }
  double k = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) k += low[a][b][c][d] * up[a][b][c][d];
  return k;
}

// Smooth expression over (x, y, z, t) that stays finite on [-1, 1]^4.
inline std::string random_expression(std::mt19937_64& rng, int depth) {
  static const char* const vars[] = {"x", "y", "z", "t"};
  auto pick = [&](unsigned n) { return static_cast<int>(rng() % n); };
  if (depth == 0) {
    if (pick(3) == 0) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", geometry::uniform(rng, -2.0, 2.0));
      return buf;
    }
    return vars[pick(4)];
  }
  auto sub = [&] { return random_expression(rng, depth - 1); };
  switch (pick(12)) {
    case 0: return "(" + sub() + " + " + sub() + ")";
    case 1: return "(" + sub() + " - " + sub() + ")";
    case 2: return "(" + sub() + " * " + sub() + ")";
    case 3: return "(" + sub() + ") / (2 + (" + sub() + ")^2)";
    case 4: return "sin(" + sub() + ")";
    case 5: return "cos(" + sub() + ")";
    case 6: return "exp(0.3 * sin(" + sub() + "))";
    case 7: return "log(1.5 + (" + sub() + ")^2)";
    case 8: return "sqrt(1 + (" + sub() + ")^2)";
    case 9: return "tan(0.5 * sin(" + sub() + "))";
    case 10: return "(1.5 + cos(" + sub() + "))^0.7";
    default: return "(" + sub() + ")^" + std::to_string(2 + pick(2));
  }
}

// max |jet - oracle| over all coefficients, relative to max(1, max |jet|).
inline double relative_disagreement(const Jet& jet, const Jet& oracle) {
  const int rows = exprkit::row_count(oracle.order());
  double diff = 0.0;
  double scale = 1.0;
  for (int i = 0; i < rows; ++i) {
    diff = std::max(diff, std::abs(jet.coeff(i) - oracle.coeff(i)));
    scale = std::max(scale, std::abs(jet.coeff(i)));
  }
  return diff / scale;
}

// Largest relative disagreement between order-2 jets and central differences
// (step 1e-5) over `count` random expressions, each at one random point.
inline double jet_oracle_corpus(int count, std::uint64_t seed) {
  const Chart chart = geometry::unit_box_chart();
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int n = 0; n < count; ++n) {
    const auto expr = exprkit::parse_expression(random_expression(rng, 3), chart);
    Point x{};
    for (auto& v : x) v = geometry::uniform(rng, -0.9, 0.9);
    const Jet jet = exprkit::eval_jet(expr, x, 2);
    const Jet fd = exprkit::finite_difference_oracle(expr, x, 2, 1e-5);
    worst = std::max(worst, relative_disagreement(jet, fd));
  }
  return worst;
}

}  // namespace ecsk::test
