#include "cgsb/expr_ast.hpp"

#include <cstdlib>
#include <stdexcept>

#include "cgsb/text.hpp"

namespace cgsb {

IndexExpr IndexExpr::constant(std::int64_t v) {
  IndexExpr e;
  e.op_ = Op::Const;
  e.value_ = v;
  return e;
}

IndexExpr IndexExpr::var(std::string name) {
  IndexExpr e;
  e.op_ = Op::Var;
  e.name_ = std::move(name);
  return e;
}

IndexExpr IndexExpr::unary(Op op, IndexExpr a) {
  IndexExpr e;
  e.op_ = op;
  e.args_.push_back(std::move(a));
  return e;
}

IndexExpr IndexExpr::binary(Op op, IndexExpr a, IndexExpr b) {
  IndexExpr e;
  e.op_ = op;
  e.args_.push_back(std::move(a));
  e.args_.push_back(std::move(b));
  return e;
}

std::int64_t IndexExpr::eval(const Bindings& env) const {
  std::int64_t r = 0;
  switch (op_) {
    case Op::Const:
      return value_;
    case Op::Var: {
      auto it = env.find(name_);
      if (it == env.end()) throw std::out_of_range("unbound index variable '" + name_ + "'");
      return it->second;
    }
    case Op::Neg:
      if (__builtin_sub_overflow(std::int64_t{0}, args_[0].eval(env), &r)) break;
      return r;
    case Op::Abs: {
      std::int64_t a = args_[0].eval(env);
      if (a < 0 && __builtin_sub_overflow(std::int64_t{0}, a, &r)) break;
      return a < 0 ? r : a;
    }
    case Op::Add:
      if (__builtin_add_overflow(args_[0].eval(env), args_[1].eval(env), &r)) break;
      return r;
    case Op::Sub:
      if (__builtin_sub_overflow(args_[0].eval(env), args_[1].eval(env), &r)) break;
      return r;
    case Op::Mul:
      if (__builtin_mul_overflow(args_[0].eval(env), args_[1].eval(env), &r)) break;
      return r;
  }
  throw std::out_of_range("index arithmetic overflow");
}

void IndexExpr::collect_vars(std::vector<std::string>& out) const {
  if (op_ == Op::Var) {
    for (const auto& v : out)
      if (v == name_) return;
    out.push_back(name_);
  }
  for (const auto& a : args_) a.collect_vars(out);
}

std::string IndexExpr::to_string() const {
  auto wrap = [](const IndexExpr& e) {
    return e.op_ == Op::Add || e.op_ == Op::Sub ? "(" + e.to_string() + ")" : e.to_string();
  };
  switch (op_) {
    case Op::Const:
      return std::to_string(value_);
    case Op::Var:
      return name_;
    case Op::Neg:
      return "-" + wrap(args_[0]);
    case Op::Abs:
      return "abs(" + args_[0].to_string() + ")";
    case Op::Add:
      return args_[0].to_string() + "+" + args_[1].to_string();
    case Op::Sub:
      return args_[0].to_string() + "-" + wrap(args_[1]);
    case Op::Mul:
      return wrap(args_[0]) + "*" + wrap(args_[1]);
  }
  return {};
}

Condition Condition::compare(Op op, IndexExpr a, IndexExpr b) {
  Condition c;
  c.op_ = op;
  c.sides_ = {std::move(a), std::move(b)};
  return c;
}

Condition Condition::logic(Op op, std::vector<Condition> args) {
  Condition c;
  c.op_ = op;
  c.args_ = std::move(args);
  return c;
}

bool Condition::eval(const Bindings& env) const {
  switch (op_) {
    case Op::Lt:
      return sides_[0].eval(env) < sides_[1].eval(env);
    case Op::Le:
      return sides_[0].eval(env) <= sides_[1].eval(env);
    case Op::Gt:
      return sides_[0].eval(env) > sides_[1].eval(env);
    case Op::Ge:
      return sides_[0].eval(env) >= sides_[1].eval(env);
    case Op::Eq:
      return sides_[0].eval(env) == sides_[1].eval(env);
    case Op::Ne:
      return sides_[0].eval(env) != sides_[1].eval(env);
    case Op::And:
      for (const auto& a : args_)
        if (!a.eval(env)) return false;
      return true;
    case Op::Or:
      for (const auto& a : args_)
        if (a.eval(env)) return true;
      return false;
    case Op::Not:
      return !args_[0].eval(env);
  }
  return false;
}

std::string Condition::to_string() const {
  static const char* names[] = {"<", "<=", ">", ">=", "==", "!="};
  switch (op_) {
    case Op::And:
    case Op::Or: {
      std::string s;
      for (std::size_t i = 0; i < args_.size(); ++i) {
        if (i) s += op_ == Op::And ? " and " : " or ";
        bool paren = op_ == Op::And && args_[i].op_ == Op::Or;
        s += paren ? "(" + args_[i].to_string() + ")" : args_[i].to_string();
      }
      return s;
    }
    case Op::Not:
      return "not (" + args_[0].to_string() + ")";
    default:
      return sides_[0].to_string() + " " + names[static_cast<int>(op_)] + " " + sides_[1].to_string();
  }
}

ExprPtr ExprAst::instantiate(const Signature& sig, const Bindings& env) const {
  return std::visit(
      [&](const auto& n) -> ExprPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, GenRef>) {
          std::optional<std::int64_t> idx;
          if (n.index) idx = n.index->eval(env);
          return RawExpr::gen(sig.letter(n.name, idx));
        } else if constexpr (std::is_same_v<T, Deriv>) {
          return RawExpr::d(n.arg->instantiate(sig, env), n.power);
        } else if constexpr (std::is_same_v<T, Prod>) {
          return RawExpr::prod(static_cast<std::int64_t>(n.n), n.left->instantiate(sig, env),
                               n.right->instantiate(sig, env));
        } else {
          std::vector<std::pair<Rational, ExprPtr>> terms;
          for (const auto& [c, sub] : n.terms) terms.emplace_back(c, sub->instantiate(sig, env));
          return RawExpr::sum(std::move(terms));
        }
      },
      node_);
}

namespace {

std::string ast_string(const ExprAst& e, bool operand);

std::string factor_string(const ExprAst& e) {
  // A factor position accepts generators, D-applications and parenthesized groups.
  bool bare = std::holds_alternative<ExprAst::GenRef>(e.node()) || std::holds_alternative<ExprAst::Deriv>(e.node());
  return bare ? ast_string(e, true) : "(" + ast_string(e, false) + ")";
}

std::string ast_string(const ExprAst& e, bool operand) {
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ExprAst::GenRef>) {
          if (!n.index) return n.name;
          return n.name + "_" + (n.index->is_atomic() ? n.index->to_string() : "{" + n.index->to_string() + "}");
        } else if constexpr (std::is_same_v<T, ExprAst::Deriv>) {
          std::string d = n.power == 1 ? "D " : "D^" + std::to_string(n.power) + " ";
          return d + factor_string(*n.arg);
        } else if constexpr (std::is_same_v<T, ExprAst::Prod>) {
          // Right operand of a product may itself be a product without parentheses.
          bool right_plain = !std::holds_alternative<ExprAst::Sum>(n.right->node());
          std::string r = right_plain ? ast_string(*n.right, true) : "(" + ast_string(*n.right, false) + ")";
          std::string s = factor_string(*n.left) + " (" + std::to_string(n.n) + ") " + r;
          return s;
        } else {
          std::string s;
          for (std::size_t i = 0; i < n.terms.size(); ++i) {
            const auto& [c, sub] = n.terms[i];
            Rational mag = abs(c);
            if (i == 0) {
              if (c < 0) s += "-";
            } else {
              s += c < 0 ? " - " : " + ";
            }
            if (mag != 1) s += print_rational(mag) + " * ";
            bool nested_sum = std::holds_alternative<ExprAst::Sum>(sub->node());
            s += nested_sum ? "(" + ast_string(*sub, false) + ")" : ast_string(*sub, true);
          }
          if (n.terms.empty()) s = "0";
          return operand && n.terms.size() > 1 ? s : s;
        }
      },
      e.node());
}

}  // namespace

std::string ExprAst::to_string() const { return ast_string(*this, false); }

}  // namespace cgsb
