#include "ecsk/geometry/random_fields.hpp"

#include <cstdio>
#include <memory>

#include "ecsk/exprkit/monomials.hpp"
#include "ecsk/exprkit/parser.hpp"

namespace ecsk::geometry {

Chart unit_box_chart() {
  return Chart({"x", "y", "z", "t"}, {{{-1.0, 1.0}, {-1.0, 1.0}, {-1.0, 1.0}, {-1.0, 1.0}}});
}

std::string random_polynomial(std::mt19937_64& rng, const Chart& chart, int degree, double scale) {
  std::string out;
  const auto& basis = exprkit::basis();
  for (int i = 0; i < exprkit::row_count(degree); ++i) {
    const double c = uniform(rng, -scale, scale);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", c);
    std::string term = c < 0 ? std::string("(") + buf + ")" : std::string(buf);
    for (int mu = 0; mu < 4; ++mu) {
      const int p = basis[i][mu];
      if (p == 0) continue;
      term += "*" + chart.coord_names()[mu];
      if (p > 1) term += "^" + std::to_string(p);
    }
    out += out.empty() ? term : " + " + term;
  }
  return out;
}

RandomFieldText random_field_text(std::uint64_t seed, const Chart& chart, double tetrad_scale,
                                  double connection_scale) {
  std::mt19937_64 rng(seed);
  RandomFieldText t;
  for (int a = 0; a < 4; ++a) {
    for (int mu = 0; mu < 4; ++mu) {
      const std::string p = random_polynomial(rng, chart, 2, tetrad_scale);
      t.tetrad.push_back(a == mu ? "1 + " + p : p);
    }
  }
  for (int i = 0; i < 24; ++i) t.connection.push_back(random_polynomial(rng, chart, 3, connection_scale));
  return t;
}

TetradField random_tetrad(std::uint64_t seed, const Chart& chart) {
  const auto text = random_field_text(seed, chart);
  TetradField::Components c;
  for (const auto& s : text.tetrad) c.push_back(exprkit::parse_expression(s, chart));
  return TetradField(std::move(c));
}

SpinConnectionField random_connection(std::uint64_t seed, const Chart& chart) {
  const auto text = random_field_text(seed, chart);
  SpinConnectionField::Components c;
  for (const auto& s : text.connection) c.push_back(exprkit::parse_expression(s, chart));
  return SpinConnectionField(std::move(c));
}

FormEvaluator random_form(std::uint64_t seed, const Chart& chart, int degree, int rank, forms::Variance variance,
                          double scale) {
  std::mt19937_64 rng(seed);
  const MixedForm<double> shape(degree, rank, variance, true);
  struct Entry {
    int internal;
    int st;
    Expression expr;
  };
  auto entries = std::make_shared<std::vector<Entry>>();
  for (int a : shape.canonical_internal()) {
    for (int m : forms::sorted_tuples(degree)) {
      entries->push_back({a, m, exprkit::parse_expression(random_polynomial(rng, chart, 3, scale), chart)});
    }
  }
  return [entries, degree, rank, variance](const Point& x, int order) {
    MixedForm<Jet> f(degree, rank, variance, true);
    for (const auto& en : *entries) f.at(en.internal, en.st) = exprkit::eval_jet(en.expr, x, order);
    f.fill_images();
    return f;
  };
}

LorentzField random_lorentz_field(std::uint64_t seed, const Chart& chart) {
  std::mt19937_64 rng(seed);
  const auto parameter = [&]() {
    char buf[160];
    const int mu = static_cast<int>(rng() % 4);
    const double a = uniform(rng, -0.4, 0.4);
    const double b = uniform(rng, -0.3, 0.3);
    const double c = uniform(rng, -1.0, 1.0);
    const double d = uniform(rng, -1.0, 1.0);
    std::snprintf(buf, sizeof buf, "%.17g + %.17g*sin(%.17g*%s + %.17g)", a, b, c, chart.coord_names()[mu].c_str(), d);
    return exprkit::parse_expression(buf, chart);
  };
  LorentzField f = LorentzField::rotation(0, 1, parameter());
  f = f.then(LorentzField::boost(0, parameter()));
  f = f.then(LorentzField::rotation(1, 2, parameter()));
  f = f.then(LorentzField::boost(1, parameter()));
  f = f.then(LorentzField::rotation(0, 2, parameter()));
  f = f.then(LorentzField::boost(2, parameter()));
  return f;
}

}  // namespace ecsk::geometry
