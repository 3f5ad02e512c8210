#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cgsb/raw_expr.hpp"
#include "cgsb/signature.hpp"

namespace cgsb {

using Bindings = std::map<std::string, std::int64_t>;

/// Integer arithmetic over schema index variables: i+j, -k, 2*i, abs(i).
class IndexExpr {
 public:
  enum class Op { Const, Var, Neg, Add, Sub, Mul, Abs };

  static IndexExpr constant(std::int64_t v);
  static IndexExpr var(std::string name);
  static IndexExpr unary(Op op, IndexExpr a);
  static IndexExpr binary(Op op, IndexExpr a, IndexExpr b);

  /// Throws std::out_of_range on unbound variables or overflow.
  std::int64_t eval(const Bindings& env) const;
  void collect_vars(std::vector<std::string>& out) const;
  bool is_atomic() const { return op_ == Op::Const || op_ == Op::Var; }
  std::string to_string() const;

 private:
  Op op_ = Op::Const;
  std::int64_t value_ = 0;
  std::string name_;
  std::vector<IndexExpr> args_;
};

/// Boolean side conditions on index variables.
class Condition {
 public:
  enum class Op { Lt, Le, Gt, Ge, Eq, Ne, And, Or, Not };

  static Condition compare(Op op, IndexExpr a, IndexExpr b);
  static Condition logic(Op op, std::vector<Condition> args);

  bool eval(const Bindings& env) const;
  std::string to_string() const;

 private:
  Op op_ = Op::Eq;
  std::vector<IndexExpr> sides_;
  std::vector<Condition> args_;
};

/// Parsed expression before generator lookup; indexed generators may carry
/// symbolic subscripts.
class ExprAst {
 public:
  struct GenRef {
    std::string name;
    std::optional<IndexExpr> index;
  };
  struct Deriv {
    std::uint32_t power;
    std::shared_ptr<const ExprAst> arg;
  };
  struct Prod {
    std::uint64_t n;
    std::shared_ptr<const ExprAst> left;
    std::shared_ptr<const ExprAst> right;
  };
  struct Sum {
    std::vector<std::pair<Rational, std::shared_ptr<const ExprAst>>> terms;
  };
  using Node = std::variant<GenRef, Deriv, Prod, Sum>;

  explicit ExprAst(Node n) : node_(std::move(n)) {}
  const Node& node() const { return node_; }

  /// Resolves generators against `sig` with index variables bound by `env`.
  ExprPtr instantiate(const Signature& sig, const Bindings& env = {}) const;
  std::string to_string() const;

 private:
  Node node_;
};

using AstPtr = std::shared_ptr<const ExprAst>;

}  // namespace cgsb
