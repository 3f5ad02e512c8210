#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "cgsb/expr_ast.hpp"
#include "cgsb/polynomial.hpp"
#include "cgsb/signature.hpp"

namespace cgsb {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// `b1 (n1) b2 (n2) ... D^i bk`.
std::string print_word(const Signature& sig, const NormalWord& w);
/// Terms descending by word order, reduced fractions, `0` for zero.
std::string print_canonical(const Signature& sig, const Polynomial& p);
std::string print_rational(const Rational& q);

/// Expression grammar:
///   poly    := ['+'|'-'] term (('+'|'-') term)*
///   term    := [RATIONAL '*'] product
///   product := factor ['(' INT ')' product]        right-associative
///   factor  := 'D' ['^' INT] factor | IDENT ['_' index] | '(' poly ')'
///   index   := ['-'] INT | IDENT | '{' index-expr '}'
AstPtr parse_expr_ast(std::string_view text);
Condition parse_condition(std::string_view text);
IndexExpr parse_index_expr(std::string_view text);

/// Parses and normalizes an expression without index variables.
Polynomial parse_polynomial(const Signature& sig, std::string_view text);
/// Parses a single normal word; rejects anything that does not normalize to one word with coefficient 1.
NormalWord parse_word(const Signature& sig, std::string_view text);

}  // namespace cgsb
