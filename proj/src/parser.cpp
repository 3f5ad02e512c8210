#include <utility>

#include "cgsb/lexer.hpp"
#include "cgsb/normal_form.hpp"
#include "cgsb/text.hpp"

namespace cgsb {

namespace {

AstPtr make(ExprAst::Node n) { return std::make_shared<const ExprAst>(std::move(n)); }

AstPtr parse_product(TokenStream& ts);

IndexExpr parse_index(TokenStream& ts) {
  if (ts.accept_symbol("{")) {
    IndexExpr e = parse_index_expr(ts);
    ts.expect_symbol("}");
    return e;
  }
  if (ts.accept_symbol("-")) return IndexExpr::constant(-static_cast<std::int64_t>(ts.expect_uint()));
  if (ts.peek().kind == Token::Kind::Int) return IndexExpr::constant(static_cast<std::int64_t>(ts.expect_uint()));
  if (ts.peek().kind == Token::Kind::Ident) return IndexExpr::var(ts.expect_ident());
  ts.fail("expected generator index");
}

AstPtr parse_factor(TokenStream& ts) {
  if (ts.is_ident("D")) {
    ts.next();
    std::uint64_t power = 1;
    if (ts.accept_symbol("^")) power = ts.expect_uint();
    if (power > 0xffffffffu) ts.fail("D-power too large");
    AstPtr arg = parse_factor(ts);
    if (power == 0) return arg;
    return make(ExprAst::Deriv{static_cast<std::uint32_t>(power), arg});
  }
  if (ts.peek().kind == Token::Kind::Ident) {
    ExprAst::GenRef g{ts.expect_ident(), std::nullopt};
    if (ts.accept_symbol("_")) g.index = parse_index(ts);
    return make(std::move(g));
  }
  if (ts.accept_symbol("(")) {
    AstPtr inner = parse_poly(ts);
    ts.expect_symbol(")");
    return inner;
  }
  ts.fail("expected generator, 'D' or '('");
}

AstPtr parse_product(TokenStream& ts) {
  AstPtr left = parse_factor(ts);
  if (!ts.is_symbol("(")) return left;
  ts.next();
  if (ts.is_symbol("-")) ts.fail("negative product index");
  std::uint64_t n = ts.expect_uint();
  ts.expect_symbol(")");
  AstPtr right = parse_product(ts);
  return make(ExprAst::Prod{n, left, right});
}

Rational parse_rational(TokenStream& ts) {
  Token num = ts.next();
  std::string text = num.text;
  if (ts.accept_symbol("/")) {
    if (ts.peek().kind != Token::Kind::Int) ts.fail("expected denominator");
    Token den = ts.next();
    if (den.text.find_first_not_of('0') == std::string::npos) ts.fail_at(den, "zero denominator");
    text += "/" + den.text;
  }
  Rational q(text);
  q.canonicalize();
  return q;
}

}  // namespace

AstPtr parse_poly(TokenStream& ts) {
  std::vector<std::pair<Rational, AstPtr>> terms;
  // A lone `0` denotes the zero polynomial.
  if (ts.peek().kind == Token::Kind::Int && ts.peek().text.find_first_not_of('0') == std::string::npos &&
      !ts.is_symbol("/", 1) && !ts.is_symbol("*", 1)) {
    ts.next();
    return make(ExprAst::Sum{});
  }
  bool first = true;
  while (true) {
    Rational sign = 1;
    if (ts.accept_symbol("-")) {
      sign = -1;
    } else if (ts.accept_symbol("+")) {
    } else if (!first) {
      break;
    }
    Rational coeff = 1;
    if (ts.peek().kind == Token::Kind::Int) {
      coeff = parse_rational(ts);
      ts.expect_symbol("*");
    }
    terms.emplace_back(sign * coeff, parse_product(ts));
    first = false;
    if (!ts.is_symbol("+") && !ts.is_symbol("-")) break;
  }
  if (terms.size() == 1 && terms[0].first == 1) return terms[0].second;
  return make(ExprAst::Sum{std::move(terms)});
}

IndexExpr parse_index_expr(TokenStream& ts) {
  auto atom = [&ts]() -> IndexExpr {
    if (ts.accept_symbol("(")) {
      IndexExpr e = parse_index_expr(ts);
      ts.expect_symbol(")");
      return e;
    }
    if (ts.accept_symbol("-")) {
      if (ts.peek().kind == Token::Kind::Int) return IndexExpr::constant(-static_cast<std::int64_t>(ts.expect_uint()));
      return IndexExpr::unary(IndexExpr::Op::Neg, parse_index_expr(ts));
    }
    if (ts.accept_symbol("|")) {
      IndexExpr e = parse_index_expr(ts);
      ts.expect_symbol("|");
      return IndexExpr::unary(IndexExpr::Op::Abs, std::move(e));
    }
    if (ts.peek().kind == Token::Kind::Int) return IndexExpr::constant(static_cast<std::int64_t>(ts.expect_uint()));
    if (ts.is_ident("abs") && ts.is_symbol("(", 1)) {
      ts.next();
      ts.next();
      IndexExpr e = parse_index_expr(ts);
      ts.expect_symbol(")");
      return IndexExpr::unary(IndexExpr::Op::Abs, std::move(e));
    }
    if (ts.peek().kind == Token::Kind::Ident) return IndexExpr::var(ts.expect_ident());
    ts.fail("expected index expression");
  };
  auto product = [&]() {
    IndexExpr e = atom();
    while (ts.accept_symbol("*")) e = IndexExpr::binary(IndexExpr::Op::Mul, std::move(e), atom());
    return e;
  };
  IndexExpr e = product();
  while (true) {
    if (ts.accept_symbol("+")) {
      e = IndexExpr::binary(IndexExpr::Op::Add, std::move(e), product());
    } else if (ts.accept_symbol("-")) {
      e = IndexExpr::binary(IndexExpr::Op::Sub, std::move(e), product());
    } else {
      return e;
    }
  }
}

namespace {

Condition parse_or(TokenStream& ts);

Condition parse_atom_condition(TokenStream& ts) {
  if (ts.is_ident("not") || ts.is_symbol("!")) {
    ts.next();
    return Condition::logic(Condition::Op::Not, {parse_atom_condition(ts)});
  }
  // Parenthesized condition vs parenthesized index expression: try the condition first.
  if (ts.is_symbol("(")) {
    std::size_t save = ts.position();
    ts.next();
    try {
      Condition c = parse_or(ts);
      ts.expect_symbol(")");
      return c;
    } catch (const ParseError&) {
      ts.reset(save);
    }
  }
  IndexExpr lhs = parse_index_expr(ts);
  static const std::pair<const char*, Condition::Op> ops[] = {
      {"<=", Condition::Op::Le}, {">=", Condition::Op::Ge}, {"==", Condition::Op::Eq}, {"!=", Condition::Op::Ne},
      {"<", Condition::Op::Lt},  {">", Condition::Op::Gt},  {"=", Condition::Op::Eq}};
  for (const auto& [sym, op] : ops) {
    if (ts.accept_symbol(sym)) {
      // Chains such as i > j > 0 expand to i > j and j > 0.
      IndexExpr rhs = parse_index_expr(ts);
      std::vector<Condition> chain{Condition::compare(op, lhs, rhs)};
      bool more = true;
      while (more) {
        more = false;
        for (const auto& [sym2, op2] : ops) {
          if (ts.accept_symbol(sym2)) {
            IndexExpr next = parse_index_expr(ts);
            chain.push_back(Condition::compare(op2, rhs, next));
            rhs = next;
            more = true;
            break;
          }
        }
      }
      if (chain.size() == 1) return chain[0];
      return Condition::logic(Condition::Op::And, std::move(chain));
    }
  }
  ts.fail("expected comparison operator");
}

Condition parse_and(TokenStream& ts) {
  std::vector<Condition> parts{parse_atom_condition(ts)};
  while (ts.is_ident("and") || ts.is_symbol("&&") || ts.is_symbol(",")) {
    ts.next();
    parts.push_back(parse_atom_condition(ts));
  }
  if (parts.size() == 1) return parts[0];
  return Condition::logic(Condition::Op::And, std::move(parts));
}

Condition parse_or(TokenStream& ts) {
  std::vector<Condition> parts{parse_and(ts)};
  while (ts.is_ident("or") || ts.is_symbol("||")) {
    ts.next();
    parts.push_back(parse_and(ts));
  }
  if (parts.size() == 1) return parts[0];
  return Condition::logic(Condition::Op::Or, std::move(parts));
}

template <typename F>
auto parse_all(std::string_view text, F f) {
  TokenStream ts(tokenize(text));
  auto r = f(ts);
  if (!ts.at_end()) ts.fail("unexpected trailing input");
  return r;
}

}  // namespace

Condition parse_condition(TokenStream& ts) { return parse_or(ts); }

AstPtr parse_expr_ast(std::string_view text) {
  return parse_all(text, [](TokenStream& ts) { return parse_poly(ts); });
}

Condition parse_condition(std::string_view text) {
  return parse_all(text, [](TokenStream& ts) { return parse_or(ts); });
}

IndexExpr parse_index_expr(std::string_view text) {
  return parse_all(text, [](TokenStream& ts) { return parse_index_expr(ts); });
}

Polynomial parse_polynomial(const Signature& sig, std::string_view text) {
  AstPtr ast = parse_expr_ast(text);
  return normalize(*ast->instantiate(sig), sig);
}

NormalWord parse_word(const Signature& sig, std::string_view text) {
  Polynomial p = parse_polynomial(sig, text);
  if (p.size() != 1 || p.leading_coeff() != 1) throw ParseError("expected a single normal word", 1, 1);
  return p.leading_word();
}

}  // namespace cgsb
