#pragma once
// Immutable expression trees over chart coordinates and named parameters.

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecsk/exprkit/chart.hpp"
#include "ecsk/exprkit/jet.hpp"

namespace ecsk::exprkit {

enum class Op {
  Constant,
  Coordinate,
  Parameter,
  Add,
  Sub,
  Mul,
  Div,
  Neg,
  IntPow,   // child ^ int_exponent
  RealPow,  // child0 ^ child1, base must be positive
  Sin,
  Cos,
  Tan,
  Exp,
  Log,
  Sqrt,
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  Op op = Op::Constant;
  double value = 0.0;    // Constant literal, or the bound value of a Parameter
  int index = -1;        // Coordinate slot
  int int_exponent = 0;  // IntPow
  std::string name;      // Coordinate / Parameter / function name
  std::vector<NodePtr> args;
};

using ParameterMap = std::map<std::string, double, std::less<>>;

class Expression {
 public:
  Expression(NodePtr root, Chart chart) : root_(std::move(root)), chart_(std::move(chart)) {}

  static Expression constant(double v, const Chart& chart);
  static Expression coordinate(int mu, const Chart& chart);

  const Node& root() const { return *root_; }
  const NodePtr& root_ptr() const { return root_; }
  const Chart& chart() const { return chart_; }

  // Fully parenthesized DSL text that parses back to the same tree.
  std::string print() const;

  bool structurally_equal(const Expression& other) const;

 private:
  NodePtr root_;
  Chart chart_;
};

std::string print_node(const Node& n);
bool structurally_equal(const Node& a, const Node& b);

// Raised when an expression is evaluated where it is undefined.
class DomainError : public std::runtime_error {
 public:
  DomainError(const std::string& message, std::string subexpression)
      : std::runtime_error(message + (subexpression.empty() ? "" : " in " + subexpression)),
        subexpression_(std::move(subexpression)) {}
  const std::string& subexpression() const { return subexpression_; }

 private:
  std::string subexpression_;
};

// Value and all partials up to `order` at x, by propagating jets through the
// tree. Throws DomainError outside the chart or where the expression is
// undefined.
Jet eval_jet(const Expression& expr, const Point& x, int order);

// Plain double evaluation with the same domain rules; shares no code with
// the jet path.
double eval_value(const Expression& expr, const Point& x);

}  // namespace ecsk::exprkit
