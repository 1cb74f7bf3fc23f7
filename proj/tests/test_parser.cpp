#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ecsk/exprkit/parser.hpp"
#include "test_support.hpp"

using namespace ecsk;
using namespace ecsk::exprkit;

namespace {

Chart polar() { return Chart({"r", "th", "ph", "t"}, {{{0, 10}, {0, 3.2}, {0, 6.3}, {-5, 5}}}); }

double value(const char* text, const Point& x = {2, 1, 0, 0}, const ParameterMap& p = {}) {
  return eval_value(parse_expression(text, polar(), p), x);
}

ParseError parse_error(const char* text, const ParameterMap& p = {}) {
  try {
    (void)parse_expression(text, polar(), p);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for " << text);
  return ParseError(ParseError::Kind::Syntax, 0, "");
}

}  // namespace

TEST_SUITE("parser") {
  TEST_CASE("coordinates and functions") {
    CHECK(value("r^2*sin(th)") == doctest::Approx(4 * std::sin(1.0)).epsilon(1e-15));
  }

  TEST_CASE("precedence and associativity") {
    CHECK(value("2^3^2") == 512.0);
    CHECK(value("-2^2") == -4.0);
    CHECK(value("(-2)^2") == 4.0);
    CHECK(value("8/4/2") == 1.0);
    CHECK(value("2-3-4") == -5.0);
    CHECK(value("2*3+4*5") == 26.0);
    CHECK(value("2+3*4^2") == 50.0);
    CHECK(value("--3") == 3.0);
    CHECK(value("2^-1") == 0.5);
    CHECK(value("-r*th") == -2.0);
  }

  TEST_CASE("number forms") {
    CHECK(value("1.5e2") == 150.0);
    CHECK(value(".25") == 0.25);
    CHECK(value("2E-1") == 0.2);
  }

  TEST_CASE("parameters and pi") {
    CHECK(value("2*M/r", {2, 1, 0, 0}, {{"M", 1.5}}) == 1.5);
    CHECK(value("pi") == std::numbers::pi);
    CHECK(value("pi", {2, 1, 0, 0}, {{"pi", 3.0}}) == 3.0);
  }

  TEST_CASE("integer and real powers are distinct nodes") {
    CHECK(parse_expression("r^2", polar()).root().op == Op::IntPow);
    CHECK(parse_expression("r^-2", polar()).root().op == Op::IntPow);
    CHECK(parse_expression("r^2.5", polar()).root().op == Op::RealPow);
    CHECK(parse_expression("r^th", polar()).root().op == Op::RealPow);
  }

  TEST_CASE("trailing operator is a syntax error at end of input") {
    const Chart c({"x", "y", "z", "t"}, {{{0, 1}, {0, 1}, {0, 1}, {0, 1}}});
    try {
      (void)parse_expression("x +", c);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.kind() == ParseError::Kind::Syntax);
      CHECK(e.position() == 3);
      CHECK(std::string(e.what()).find("end of input") != std::string::npos);
    }
  }

  TEST_CASE("undeclared symbol is named") {
    const auto e = parse_error("q*r");
    CHECK(e.kind() == ParseError::Kind::UnknownSymbol);
    CHECK(e.symbol() == "q");
    CHECK(e.position() == 0);
  }

  TEST_CASE("other malformed inputs") {
    CHECK(parse_error("").kind() == ParseError::Kind::Syntax);
    CHECK(parse_error("   ").kind() == ParseError::Kind::Syntax);
    CHECK(parse_error("(r").kind() == ParseError::Kind::Syntax);
    CHECK(parse_error("r)").kind() == ParseError::Kind::Syntax);
    CHECK(parse_error("r $ 2").kind() == ParseError::Kind::Syntax);
    CHECK(parse_error("1.2.3").kind() == ParseError::Kind::Syntax);
    CHECK(parse_error("sin(r, th)").kind() == ParseError::Kind::Arity);
    CHECK(parse_error("sin()").kind() == ParseError::Kind::Arity);
    CHECK(parse_error("sin r").kind() == ParseError::Kind::Arity);
    const auto f = parse_error("foo(r)");
    CHECK(f.kind() == ParseError::Kind::UnknownSymbol);
    CHECK(f.symbol() == "foo");
  }

  TEST_CASE("printing parses back to the same tree") {
    const auto chart = geometry::unit_box_chart();
    std::mt19937_64 rng(21);
    const std::vector<std::string> fixed{"-x^2", "x^-3", "2^x^y", "-(x - y) / -z", "1e-300 * x", "0.1 + 0.2",
                                         "sin(cos(tan(x)))", "exp(log(sqrt(2 + x)))", "(x + y)^0.5"};
    std::vector<std::string> corpus = fixed;
    for (int n = 0; n < 200; ++n) corpus.push_back(test::random_expression(rng, 4));
    for (const auto& s : corpus) {
      CAPTURE(s);
      const auto first = parse_expression(s, chart);
      const auto again = parse_expression(first.print(), chart);
      CHECK(first.structurally_equal(again));
      CHECK(again.print() == first.print());
    }
  }

  TEST_CASE("chart validation") {
    CHECK_THROWS_AS(Chart({"x", "x", "z", "t"}, {{{0, 1}, {0, 1}, {0, 1}, {0, 1}}}), ChartError);
    CHECK_THROWS_AS(Chart({"x", "y", "z", "t"}, {{{0, 1}, {1, 1}, {0, 1}, {0, 1}}}), ChartError);
  }
}
