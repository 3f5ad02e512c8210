#include "cgsb/lexer.hpp"

#include <cctype>
#include <limits>

namespace cgsb {

std::vector<Token> tokenize(std::string_view text, bool keep_newlines) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t t = 0; t < k; ++t, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (c == '\n') {
      if (keep_newlines) out.push_back({Token::Kind::Newline, "\n", line, col});
      advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '\''))
        ++j;
      t.kind = Token::Kind::Ident;
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = Token::Kind::Int;
      advance(j - i);
    } else {
      t.kind = Token::Kind::Symbol;
      static constexpr std::string_view two[] = {"<=", ">=", "==", "!=", "&&", "||"};
      std::size_t len = 1;
      for (auto op : two)
        if (text.substr(i, 2) == op) len = 2;
      advance(len);
    }
    t.text = std::string(text.substr(start, i - start));
    out.push_back(std::move(t));
  }
  out.push_back({Token::Kind::End, "", line, col});
  return out;
}

const Token& TokenStream::peek(std::size_t ahead) const {
  std::size_t p = pos_ + ahead;
  return p < tokens_.size() ? tokens_[p] : tokens_.back();
}

Token TokenStream::next() {
  Token t = peek();
  if (pos_ < tokens_.size() - 1) ++pos_;
  return t;
}

bool TokenStream::is_symbol(std::string_view s, std::size_t ahead) const {
  const Token& t = peek(ahead);
  return t.kind == Token::Kind::Symbol && t.text == s;
}

bool TokenStream::is_ident(std::string_view s, std::size_t ahead) const {
  const Token& t = peek(ahead);
  return t.kind == Token::Kind::Ident && t.text == s;
}

bool TokenStream::accept_symbol(std::string_view s) {
  if (!is_symbol(s)) return false;
  next();
  return true;
}

void TokenStream::expect_symbol(std::string_view s) {
  if (!accept_symbol(s)) fail("expected '" + std::string(s) + "'");
}

std::string TokenStream::expect_ident() {
  if (peek().kind != Token::Kind::Ident) fail("expected identifier");
  return next().text;
}

std::uint64_t TokenStream::expect_uint() {
  if (peek().kind != Token::Kind::Int) fail("expected integer");
  Token t = next();
  if (t.text.size() > 18) fail_at(t, "integer too large");
  return std::stoull(t.text);
}

void TokenStream::skip_newlines() {
  while (peek().kind == Token::Kind::Newline) next();
}

void TokenStream::fail(const std::string& what) const { fail_at(peek(), what); }

void TokenStream::fail_at(const Token& t, const std::string& what) const {
  std::string found = t.kind == Token::Kind::End ? "end of input" : t.kind == Token::Kind::Newline ? "end of line" : "'" + t.text + "'";
  throw ParseError(what + ", found " + found, t.line, t.column);
}

}  // namespace cgsb
