#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "cgsb/polynomial.hpp"

namespace cgsb {

class RawExpr;
using ExprPtr = std::shared_ptr<const RawExpr>;

/// An arbitrary bracketing of generators, D-powers, n-products and linear
/// combinations. Indices are unbounded here; locality is applied by normalize().
class RawExpr {
 public:
  struct Gen {
    Letter letter;
  };
  struct Deriv {
    std::uint32_t power;
    ExprPtr arg;
  };
  struct Prod {
    std::uint64_t n;
    ExprPtr left;
    ExprPtr right;
  };
  struct Sum {
    std::vector<std::pair<Rational, ExprPtr>> terms;
  };
  using Node = std::variant<Gen, Deriv, Prod, Sum>;

  explicit RawExpr(Node node) : node_(std::move(node)) {}
  const Node& node() const { return node_; }

  static ExprPtr gen(Letter l);
  static ExprPtr d(ExprPtr e, std::uint32_t power = 1);
  /// Throws std::invalid_argument for n < 0.
  static ExprPtr prod(std::int64_t n, ExprPtr left, ExprPtr right);
  static ExprPtr sum(std::vector<std::pair<Rational, ExprPtr>> terms);
  /// The right-normed bracketing [u] of a normal word.
  static ExprPtr embed(const NormalWord& u);
  /// Sum of coefficient times [u] over the terms of p.
  static ExprPtr embed(const Polynomial& p);

 private:
  Node node_;
};

/// Number of generator leaves; defined only for expressions without Sum nodes.
std::size_t leaf_count(const RawExpr& e);

}  // namespace cgsb
