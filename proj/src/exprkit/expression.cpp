#include "ecsk/exprkit/expression.hpp"

#include <cstdio>

namespace ecsk::exprkit {
namespace {

const char* function_name(Op op) {
  switch (op) {
    case Op::Sin: return "sin";
    case Op::Cos: return "cos";
    case Op::Tan: return "tan";
    case Op::Exp: return "exp";
    case Op::Log: return "log";
    case Op::Sqrt: return "sqrt";
    default: return nullptr;
  }
}

const char* binary_symbol(Op op) {
  switch (op) {
    case Op::Add: return "+";
    case Op::Sub: return "-";
    case Op::Mul: return "*";
    case Op::Div: return "/";
    default: return nullptr;
  }
}

// A literal must not re-read as an integer exponent, so integral values get
// a trailing ".0".
std::string format_literal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s = buf;
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

}  // namespace

Expression Expression::constant(double v, const Chart& chart) {
  auto n = std::make_shared<Node>();
  n->op = Op::Constant;
  n->value = v;
  return Expression(n, chart);
}

Expression Expression::coordinate(int mu, const Chart& chart) {
  auto n = std::make_shared<Node>();
  n->op = Op::Coordinate;
  n->index = mu;
  n->name = chart.coord_names()[mu];
  return Expression(n, chart);
}

std::string print_node(const Node& n) {
  switch (n.op) {
    case Op::Constant: return format_literal(n.value);
    case Op::Coordinate:
    case Op::Parameter: return n.name;
    case Op::Neg: return "(-" + print_node(*n.args[0]) + ")";
    case Op::IntPow: return "(" + print_node(*n.args[0]) + "^" + std::to_string(n.int_exponent) + ")";
    case Op::RealPow: return "(" + print_node(*n.args[0]) + "^" + print_node(*n.args[1]) + ")";
    default: break;
  }
  if (const char* sym = binary_symbol(n.op)) {
    return "(" + print_node(*n.args[0]) + " " + sym + " " + print_node(*n.args[1]) + ")";
  }
  return std::string(function_name(n.op)) + "(" + print_node(*n.args[0]) + ")";
}

bool structurally_equal(const Node& a, const Node& b) {
  if (a.op != b.op || a.args.size() != b.args.size()) return false;
  switch (a.op) {
    case Op::Constant:
      if (a.value != b.value) return false;
      break;
    case Op::Coordinate:
      if (a.index != b.index) return false;
      break;
    case Op::Parameter:
      if (a.name != b.name || a.value != b.value) return false;
      break;
    case Op::IntPow:
      if (a.int_exponent != b.int_exponent) return false;
      break;
    default: break;
  }
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!structurally_equal(*a.args[i], *b.args[i])) return false;
  }
  return true;
}

std::string Expression::print() const { return print_node(*root_); }

bool Expression::structurally_equal(const Expression& other) const {
  return chart_ == other.chart_ && exprkit::structurally_equal(*root_, *other.root_);
}

}  // namespace ecsk::exprkit
