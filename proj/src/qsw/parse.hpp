#pragma once

// Text input for scalars, Hecke elements, elements of the extended tensor
// algebra and operator expressions.
//
//   expr    := ['-'] term (('+' | '-') term)*
//   term    := power (['*' | '/'] power)*        juxtaposition multiplies
//   power   := primary ['^' exponent]
//   exponent:= ['-'] int | '(' ['-'] int ['/' '2'] ')'
//   primary := number | 'q' | 'v' | 't'int | 'K'int | 'e'int | 'e[' int,... ']'
//            | 'R(' ('e*'int | expr) ')' | 'Id' | '(' expr ')'
//
// Products are folded from the right, so an operator written to the left of
// an element acts on it and operator juxtaposition is composition.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "qsw/operators.hpp"

namespace qsw {

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::invalid_argument("at position " + std::to_string(position) + ": " + message), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

using Value = std::variant<RationalScalar, XTensorElement, OperatorExpr>;

/// Parses and evaluates; letters are checked against n.
Value parse_value(std::string_view text, int n);

XTensorElement parse_element(std::string_view text, int n);
HeckeElement parse_hecke(std::string_view text);
OperatorExpr parse_operator(std::string_view text, int n);

/// Parses, evaluates, and prints the normal form of the result.
std::string eval_expression(std::string_view text, int n);

}  // namespace qsw
