#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cgsb/text.hpp"

namespace cgsb {

struct Token {
  enum class Kind { Ident, Int, Symbol, Newline, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Splits DSL text into identifiers ([A-Za-z][A-Za-z0-9']*), unsigned
/// integers and punctuation. '#' starts a comment running to end of line.
/// Newlines are reported only when `keep_newlines` is set.
std::vector<Token> tokenize(std::string_view text, bool keep_newlines = false);

/// Recursive-descent cursor shared by the expression and presentation parsers.
class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const;
  Token next();
  bool at_end() const { return peek().kind == Token::Kind::End; }
  bool is_symbol(std::string_view s, std::size_t ahead = 0) const;
  bool is_ident(std::string_view s, std::size_t ahead = 0) const;
  bool accept_symbol(std::string_view s);
  void expect_symbol(std::string_view s);
  std::string expect_ident();
  std::uint64_t expect_uint();
  void skip_newlines();
  [[noreturn]] void fail(const std::string& what) const;
  [[noreturn]] void fail_at(const Token& t, const std::string& what) const;

  std::size_t position() const { return pos_; }
  void reset(std::size_t pos) { pos_ = pos; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

AstPtr parse_poly(TokenStream& ts);
Condition parse_condition(TokenStream& ts);
IndexExpr parse_index_expr(TokenStream& ts);

}  // namespace cgsb
