#pragma once
// Recursive-descent parser for the field-component DSL.
//
//   expr    = term , { ( "+" | "-" ) , term } ;
//   term    = unary , { ( "*" | "/" ) , unary } ;
//   unary   = "-" , unary | power ;
//   power   = primary , [ "^" , unary ] ;
//   primary = number | identifier | function , "(" , expr , ")" | "(" , expr , ")" ;
//   function = "sin" | "cos" | "tan" | "exp" | "log" | "sqrt" ;
//   number  = digits , [ "." , digits ] , [ ( "e" | "E" ) , [ "+" | "-" ] , digits ]
//           | "." , digits , [ exponent ] ;
//
// An identifier is a chart coordinate, a declared parameter, or the constant
// "pi" (coordinates and parameters shadow it). A power whose exponent is an
// integer literal, optionally negated, is an integer power and is evaluated
// by repeated multiplication; any other exponent is a real power.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ecsk/exprkit/expression.hpp"

namespace ecsk::exprkit {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UnknownSymbol, Arity };

  ParseError(Kind kind, std::size_t position, const std::string& message, std::string symbol = {});

  Kind kind() const { return kind_; }
  std::size_t position() const { return position_; }
  // The offending identifier for UnknownSymbol and Arity errors.
  const std::string& symbol() const { return symbol_; }

 private:
  Kind kind_;
  std::size_t position_;
  std::string symbol_;
};

Expression parse_expression(std::string_view text, const Chart& chart, const ParameterMap& params = {});

}  // namespace ecsk::exprkit
