#include "ecsk/exprkit/parser.hpp"

#include <cctype>
#include <charconv>
#include <numbers>

namespace ecsk::exprkit {

ParseError::ParseError(Kind kind, std::size_t position, const std::string& message, std::string symbol)
    : std::runtime_error("position " + std::to_string(position) + ": " + message),
      kind_(kind),
      position_(position),
      symbol_(std::move(symbol)) {}

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind = Tok::End;
  std::size_t pos = 0;
  std::string_view text;
  double number = 0.0;
  bool integral = false;  // digits only
};

std::shared_ptr<Node> make(Op op, std::vector<NodePtr> args = {}) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->args = std::move(args);
  return n;
}

class Parser {
 public:
  Parser(std::string_view text, const Chart& chart, const ParameterMap& params)
      : text_(text), chart_(chart), params_(params) {
    advance();
  }

  NodePtr parse() {
    if (tok_.kind == Tok::End) throw ParseError(ParseError::Kind::Syntax, 0, "empty expression");
    NodePtr e = expr();
    if (tok_.kind != Tok::End) fail("unexpected '" + std::string(tok_.text) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(ParseError::Kind::Syntax, tok_.pos, msg);
  }

  [[noreturn]] void fail_unexpected() const {
    if (tok_.kind == Tok::End) fail("unexpected end of input");
    fail("unexpected '" + std::string(tok_.text) + "'");
  }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    tok_ = Token{};
    tok_.pos = pos_;
    if (pos_ >= text_.size()) {
      tok_.kind = Tok::End;
      return;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      lex_number();
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
        ++end;
      }
      tok_.kind = Tok::Ident;
      tok_.text = text_.substr(pos_, end - pos_);
      pos_ = end;
      return;
    }
    switch (c) {
      case '+': tok_.kind = Tok::Plus; break;
      case '-': tok_.kind = Tok::Minus; break;
      case '*': tok_.kind = Tok::Star; break;
      case '/': tok_.kind = Tok::Slash; break;
      case '^': tok_.kind = Tok::Caret; break;
      case '(': tok_.kind = Tok::LParen; break;
      case ')': tok_.kind = Tok::RParen; break;
      case ',': tok_.kind = Tok::Comma; break;
      default:
        throw ParseError(ParseError::Kind::Syntax, pos_, "unexpected character '" + std::string(1, c) + "'");
    }
    tok_.text = text_.substr(pos_, 1);
    ++pos_;
  }

  void lex_number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      const std::size_t from = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return pos_ - from;
    };
    bool integral = true;
    std::size_t mantissa = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      integral = false;
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) throw ParseError(ParseError::Kind::Syntax, start, "malformed number");
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      integral = false;
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (digits() == 0) throw ParseError(ParseError::Kind::Syntax, start, "malformed exponent in number");
    }
    tok_.kind = Tok::Number;
    tok_.text = text_.substr(start, pos_ - start);
    tok_.integral = integral;
    const auto res = std::from_chars(tok_.text.data(), tok_.text.data() + tok_.text.size(), tok_.number);
    if (res.ec != std::errc() || res.ptr != tok_.text.data() + tok_.text.size()) {
      throw ParseError(ParseError::Kind::Syntax, start, "number '" + std::string(tok_.text) + "' out of range");
    }
  }

  NodePtr expr() {
    NodePtr lhs = term();
    while (tok_.kind == Tok::Plus || tok_.kind == Tok::Minus) {
      const Op op = tok_.kind == Tok::Plus ? Op::Add : Op::Sub;
      advance();
      lhs = make(op, {lhs, term()});
    }
    return lhs;
  }

  NodePtr term() {
    NodePtr lhs = unary();
    while (tok_.kind == Tok::Star || tok_.kind == Tok::Slash) {
      const Op op = tok_.kind == Tok::Star ? Op::Mul : Op::Div;
      advance();
      lhs = make(op, {lhs, unary()});
    }
    return lhs;
  }

  NodePtr unary() {
    if (tok_.kind == Tok::Minus) {
      advance();
      return make(Op::Neg, {unary()});
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (tok_.kind != Tok::Caret) return base;
    advance();

    // Integer literal exponent, possibly negated.
    const bool negated = tok_.kind == Tok::Minus;
    if (negated || tok_.kind == Tok::Number) {
      const std::size_t save_pos = pos_;
      const Token save_tok = tok_;
      if (negated) advance();
      if (tok_.kind == Tok::Number && tok_.integral) {
        const Token lit = tok_;
        advance();
        if (tok_.kind != Tok::Caret) {
          if (lit.number > 1024.0) {
            throw ParseError(ParseError::Kind::Syntax, lit.pos, "integer exponent too large");
          }
          auto n = make(Op::IntPow, {base});
          n->int_exponent = static_cast<int>(lit.number) * (negated ? -1 : 1);
          return n;
        }
      }
      pos_ = save_pos;
      tok_ = save_tok;
    }
    return make(Op::RealPow, {base, unary()});
  }

  NodePtr primary() {
    switch (tok_.kind) {
      case Tok::Number: {
        auto n = make(Op::Constant);
        n->value = tok_.number;
        advance();
        return n;
      }
      case Tok::LParen: {
        advance();
        NodePtr inner = expr();
        if (tok_.kind != Tok::RParen) fail_unexpected();
        advance();
        return inner;
      }
      case Tok::Ident: return identifier();
      default: fail_unexpected();
    }
  }

  NodePtr identifier() {
    const Token id = tok_;
    const std::string name(id.text);
    advance();

    Op fn = Op::Constant;
    if (name == "sin") fn = Op::Sin;
    else if (name == "cos") fn = Op::Cos;
    else if (name == "tan") fn = Op::Tan;
    else if (name == "exp") fn = Op::Exp;
    else if (name == "log") fn = Op::Log;
    else if (name == "sqrt") fn = Op::Sqrt;

    if (fn != Op::Constant) {
      if (tok_.kind != Tok::LParen) {
        throw ParseError(ParseError::Kind::Arity, id.pos, "function '" + name + "' expects 1 argument", name);
      }
      advance();
      std::vector<NodePtr> args;
      if (tok_.kind != Tok::RParen) {
        args.push_back(expr());
        while (tok_.kind == Tok::Comma) {
          advance();
          args.push_back(expr());
        }
      }
      if (tok_.kind != Tok::RParen) fail_unexpected();
      advance();
      if (args.size() != 1) {
        throw ParseError(ParseError::Kind::Arity, id.pos,
                         "function '" + name + "' expects 1 argument, got " + std::to_string(args.size()), name);
      }
      auto n = make(fn, std::move(args));
      n->name = name;
      return n;
    }

    if (tok_.kind == Tok::LParen) {
      throw ParseError(ParseError::Kind::UnknownSymbol, id.pos, "unknown function '" + name + "'", name);
    }
    if (const int mu = chart_.coordinate_index(name); mu >= 0) {
      auto n = make(Op::Coordinate);
      n->index = mu;
      n->name = name;
      return n;
    }
    if (const auto it = params_.find(name); it != params_.end()) {
      auto n = make(Op::Parameter);
      n->name = name;
      n->value = it->second;
      return n;
    }
    if (name == "pi") {
      auto n = make(Op::Constant);
      n->value = std::numbers::pi;
      return n;
    }
    throw ParseError(ParseError::Kind::UnknownSymbol, id.pos, "unknown symbol '" + name + "'", name);
  }

  std::string_view text_;
  const Chart& chart_;
  const ParameterMap& params_;
  std::size_t pos_ = 0;
  Token tok_;
};

}  // namespace

Expression parse_expression(std::string_view text, const Chart& chart, const ParameterMap& params) {
  return Expression(Parser(text, chart, params).parse(), chart);
}

}  // namespace ecsk::exprkit
