#include "cgsb/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cgsb/lexer.hpp"
#include "cgsb/text.hpp"

namespace cgsb {

namespace {

void collect_ast_vars(const ExprAst& e, std::vector<std::string>& out) {
  std::visit(
      [&out](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ExprAst::GenRef>) {
          if (n.index) n.index->collect_vars(out);
        } else if constexpr (std::is_same_v<T, ExprAst::Deriv>) {
          collect_ast_vars(*n.arg, out);
        } else if constexpr (std::is_same_v<T, ExprAst::Prod>) {
          collect_ast_vars(*n.left, out);
          collect_ast_vars(*n.right, out);
        } else {
          for (const auto& [c, sub] : n.terms) collect_ast_vars(*sub, out);
        }
      },
      e.node());
}

bool end_of_statement(const TokenStream& ts) {
  return ts.peek().kind == Token::Kind::Newline || ts.is_symbol(";") || ts.is_symbol("}") || ts.at_end();
}

void finish_statement(TokenStream& ts) {
  if (ts.peek().kind == Token::Kind::Newline || ts.is_symbol(";")) {
    ts.next();
    return;
  }
  if (!ts.is_symbol("}")) ts.fail("expected end of statement");
}

void skip_separators(TokenStream& ts) {
  while (ts.peek().kind == Token::Kind::Newline || ts.is_symbol(";")) ts.next();
}

// Hyphenated words such as abs-then-signed or relation-multiplier.
std::string dashed_word(TokenStream& ts) {
  std::string s;
  if (ts.peek().kind == Token::Kind::Int) return ts.next().text;
  s = ts.expect_ident();
  while (ts.is_symbol("-") && (ts.peek(1).kind == Token::Kind::Ident || ts.peek(1).kind == Token::Kind::Int)) {
    ts.next();
    s += "-" + ts.next().text;
  }
  return s;
}

std::string option_value(TokenStream& ts) {
  std::string s;
  if (ts.accept_symbol("-")) s = "-";
  s += dashed_word(ts);
  return s;
}

std::vector<std::string> name_list(TokenStream& ts) {
  std::vector<std::string> out{ts.expect_ident()};
  while (ts.accept_symbol(",")) out.push_back(ts.expect_ident());
  return out;
}

struct AlgebraDecl {
  std::optional<unsigned> N;
  std::vector<std::string> generators, families, rank;
  IndexOrder order = IndexOrder::AbsThenSigned;
};

AlgebraDecl parse_algebra(TokenStream& ts) {
  AlgebraDecl d;
  ts.expect_symbol("{");
  skip_separators(ts);
  while (!ts.accept_symbol("}")) {
    const Token key = ts.peek();
    std::string k = dashed_word(ts);
    ts.expect_symbol("=");
    if (k == "N") {
      std::uint64_t n = ts.expect_uint();
      if (n < 1 || n > 64) ts.fail_at(key, "N must be between 1 and 64");
      d.N = static_cast<unsigned>(n);
    } else if (k == "generators") {
      d.generators = name_list(ts);
    } else if (k == "families") {
      d.families = name_list(ts);
    } else if (k == "rank") {
      d.rank.push_back(ts.expect_ident());
      std::string dir;
      while (ts.is_symbol("<") || ts.is_symbol(">")) {
        std::string op = ts.next().text;
        if (!dir.empty() && op != dir) ts.fail("rank must use a single direction");
        dir = op;
        d.rank.push_back(ts.expect_ident());
      }
      if (dir == ">") std::reverse(d.rank.begin(), d.rank.end());
    } else if (k == "order") {
      const Token at = ts.peek();
      std::string v = dashed_word(ts);
      if (v == "abs-then-signed") {
        d.order = IndexOrder::AbsThenSigned;
      } else if (v == "natural") {
        d.order = IndexOrder::Natural;
      } else {
        ts.fail_at(at, "unknown order '" + v + "'");
      }
    } else {
      ts.fail_at(key, "unknown algebra setting '" + k + "'");
    }
    finish_statement(ts);
    skip_separators(ts);
  }
  if (!d.N) ts.fail("algebra block must set N");
  return d;
}

Signature make_signature(const AlgebraDecl& d, TokenStream& ts) {
  std::vector<std::string> declared = d.generators;
  declared.insert(declared.end(), d.families.begin(), d.families.end());
  if (declared.empty()) ts.fail("algebra block declares no generators");
  std::vector<std::string> order = declared;
  if (!d.rank.empty()) {
    std::set<std::string> a(declared.begin(), declared.end()), b(d.rank.begin(), d.rank.end());
    if (a != b || d.rank.size() != declared.size()) ts.fail("rank must list every generator name exactly once");
    order = d.rank;
  }
  std::vector<GeneratorName> names;
  for (const auto& n : order)
    names.push_back({n, std::find(d.families.begin(), d.families.end(), n) != d.families.end()});
  return Signature(*d.N, std::move(names), d.order);
}

std::optional<IndexExpr> table_index(TokenStream& ts) {
  if (!ts.accept_symbol("_")) return std::nullopt;
  if (ts.accept_symbol("-")) return IndexExpr::constant(-static_cast<std::int64_t>(ts.expect_uint()));
  if (ts.peek().kind == Token::Kind::Int) return IndexExpr::constant(static_cast<std::int64_t>(ts.expect_uint()));
  return IndexExpr::var(ts.expect_ident());
}

void check_vars(TokenStream& ts, const Token& at, const AstPtr& body, const std::vector<std::string>& bound) {
  std::vector<std::string> used;
  collect_ast_vars(*body, used);
  for (const auto& v : used)
    if (std::find(bound.begin(), bound.end(), v) == bound.end()) ts.fail_at(at, "unbound index variable '" + v + "'");
}

std::string index_text(const std::optional<IndexExpr>& e) {
  if (!e) return "";
  std::string s = e->to_string();
  return "_" + s;
}

}  // namespace

bool Presentation::has_families() const {
  return std::any_of(sig.names().begin(), sig.names().end(), [](const GeneratorName& g) { return g.indexed; });
}

std::int64_t Presentation::option(const std::string& key, std::int64_t fallback) const {
  auto it = options.find(key);
  if (it == options.end()) return fallback;
  try {
    std::size_t used = 0;
    std::int64_t v = std::stoll(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("option '" + key + "' needs an integer value, got '" + it->second + "'");
  }
}

Presentation parse_presentation(std::string_view text) {
  TokenStream ts(tokenize(text, true));
  Presentation p;
  bool have_algebra = false;
  skip_separators(ts);
  while (!ts.at_end()) {
    const Token block = ts.peek();
    std::string kind = ts.expect_ident();
    if (kind == "algebra") {
      if (have_algebra) ts.fail_at(block, "duplicate algebra block");
      AlgebraDecl d = parse_algebra(ts);
      p.sig = make_signature(d, ts);
      have_algebra = true;
    } else if (kind == "relations" || kind == "table") {
      if (!have_algebra) ts.fail_at(block, "'" + kind + "' block before the algebra block");
      ts.expect_symbol("{");
      skip_separators(ts);
      while (!ts.accept_symbol("}")) {
        const Token at = ts.peek();
        if (kind == "relations") {
          std::string name = ts.expect_ident();
          std::vector<std::string> vars;
          std::optional<Condition> cond;
          if (ts.accept_symbol("[")) {
            vars = name_list(ts);
            if (ts.accept_symbol("|")) cond = parse_condition(ts);
            ts.expect_symbol("]");
          }
          ts.expect_symbol("=");
          AstPtr body = parse_poly(ts);
          check_vars(ts, at, body, vars);
          if (vars.empty()) {
            if (cond) ts.fail_at(at, "condition without index variables");
            p.relations.push_back({name, normalize(*body->instantiate(p.sig), p.sig)});
          } else {
            p.schemas.push_back({name, vars, cond, body});
          }
        } else {
          TableEntry e;
          e.left = ts.expect_ident();
          e.left_index = table_index(ts);
          ts.expect_symbol("[");
          std::uint64_t n = ts.expect_uint();
          if (n >= p.sig.locality()) ts.fail("table index must be below N");
          e.n = static_cast<std::uint32_t>(n);
          ts.expect_symbol("]");
          e.right = ts.expect_ident();
          e.right_index = table_index(ts);
          ts.expect_symbol("=");
          e.value = parse_poly(ts);
          for (const auto& [g, idx] : {std::pair{e.left, e.left_index}, std::pair{e.right, e.right_index}}) {
            auto r = p.sig.find_name(g);
            if (!r) ts.fail_at(at, "unknown generator '" + g + "'");
            if (p.sig.names()[*r].indexed != idx.has_value()) ts.fail_at(at, "index mismatch for '" + g + "'");
          }
          std::vector<std::string> bound;
          if (e.left_index) e.left_index->collect_vars(bound);
          if (e.right_index) e.right_index->collect_vars(bound);
          check_vars(ts, at, e.value, bound);
          p.table.push_back(std::move(e));
        }
        if (!end_of_statement(ts)) ts.fail("expected end of statement");
        finish_statement(ts);
        skip_separators(ts);
      }
    } else if (kind == "options") {
      ts.expect_symbol("{");
      skip_separators(ts);
      while (!ts.accept_symbol("}")) {
        std::string key = dashed_word(ts);
        ts.expect_symbol("=");
        p.options[key] = option_value(ts);
        finish_statement(ts);
        skip_separators(ts);
      }
    } else {
      ts.fail_at(block, "unknown block '" + kind + "'");
    }
    skip_separators(ts);
  }
  if (!have_algebra) throw ParseError("missing algebra block", 1, 1);
  return p;
}

std::string print_presentation(const Presentation& p) {
  std::ostringstream out;
  std::vector<std::string> gens, fams, rank;
  for (const auto& g : p.sig.names()) {
    (g.indexed ? fams : gens).push_back(g.name);
    rank.push_back(g.name);
  }
  auto join = [](const std::vector<std::string>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
  };
  out << "algebra {\n  N = " << p.sig.locality() << "\n";
  if (!gens.empty()) out << "  generators = " << join(gens, ", ") << "\n";
  if (!fams.empty()) out << "  families = " << join(fams, ", ") << "\n";
  out << "  rank = " << join(rank, " < ") << "\n";
  out << "  order = " << (p.sig.index_order() == IndexOrder::Natural ? "natural" : "abs-then-signed") << "\n}\n";
  if (!p.table.empty()) {
    out << "table {\n";
    for (const auto& e : p.table)
      out << "  " << e.left << index_text(e.left_index) << " [" << e.n << "] " << e.right << index_text(e.right_index)
          << " = " << e.value->to_string() << "\n";
    out << "}\n";
  }
  if (!p.relations.empty() || !p.schemas.empty()) {
    out << "relations {\n";
    for (const auto& r : p.relations) out << "  " << r.name << " = " << print_canonical(p.sig, r.poly) << "\n";
    for (const auto& s : p.schemas) {
      out << "  " << s.name << "[" << join(s.vars, ", ");
      if (s.condition) out << " | " << s.condition->to_string();
      out << "] = " << s.body->to_string() << "\n";
    }
    out << "}\n";
  }
  if (!p.options.empty()) {
    out << "options {\n";
    for (const auto& [k, v] : p.options) out << "  " << k << " = " << v << "\n";
    out << "}\n";
  }
  return out.str();
}

LieTable lie_table(const Presentation& p) {
  struct Shared {
    Presentation pres;
  };
  auto shared = std::make_shared<Shared>(Shared{p});

  auto direct = [shared](Letter x, std::uint32_t n, Letter y, bool* listed) -> KDElement {
    const Signature& sig = shared->pres.sig;
    Generator gx = sig.decode(x), gy = sig.decode(y);
    *listed = false;
    for (const auto& e : shared->pres.table) {
      if (e.left != gx.name || e.right != gy.name) continue;
      Bindings env;
      auto bind = [&env](const std::optional<IndexExpr>& pat, const std::optional<std::int64_t>& v) {
        if (!pat) return true;
        std::vector<std::string> vars;
        pat->collect_vars(vars);
        if (vars.empty()) return pat->eval({}) == *v;
        auto [it, fresh] = env.emplace(vars.front(), *v);
        return fresh || it->second == *v;
      };
      if (!bind(e.left_index, gx.index) || !bind(e.right_index, gy.index)) continue;
      *listed = true;
      if (e.n != n) continue;
      return KDElement::from_polynomial(normalize(*e.value->instantiate(sig, env), sig));
    }
    return {};
  };

  unsigned N = p.sig.locality();
  return LieTable(N, [direct, N](Letter x, std::uint32_t n, Letter y) -> KDElement {
    bool listed = false;
    KDElement v = direct(x, n, y, &listed);
    if (listed) return v;
    bool reverse_listed = false;
    direct(y, 0, x, &reverse_listed);
    if (!reverse_listed) return {};
    LieTable forward(N, [direct](Letter a, std::uint32_t m, Letter b) {
      bool l = false;
      return direct(a, m, b, &l);
    });
    return skew(forward, y, n, x);
  });
}

}  // namespace cgsb
