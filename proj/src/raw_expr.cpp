#include "cgsb/raw_expr.hpp"

#include <stdexcept>

namespace cgsb {

ExprPtr RawExpr::gen(Letter l) { return std::make_shared<RawExpr>(Gen{l}); }

ExprPtr RawExpr::d(ExprPtr e, std::uint32_t power) {
  if (power == 0) return e;
  return std::make_shared<RawExpr>(Deriv{power, std::move(e)});
}

ExprPtr RawExpr::prod(std::int64_t n, ExprPtr left, ExprPtr right) {
  if (n < 0) throw std::invalid_argument("negative product index " + std::to_string(n));
  return std::make_shared<RawExpr>(Prod{static_cast<std::uint64_t>(n), std::move(left), std::move(right)});
}

ExprPtr RawExpr::sum(std::vector<std::pair<Rational, ExprPtr>> terms) {
  return std::make_shared<RawExpr>(Sum{std::move(terms)});
}

ExprPtr RawExpr::embed(const NormalWord& u) {
  ExprPtr e = d(gen(u.tail()), u.dpow());
  for (std::size_t i = u.length() - 1; i-- > 0;) e = prod(u.join(i), gen(u.letter(i)), e);
  return e;
}

ExprPtr RawExpr::embed(const Polynomial& p) {
  std::vector<std::pair<Rational, ExprPtr>> terms;
  for (const auto& t : p.terms()) terms.emplace_back(t.coeff, embed(t.word));
  return sum(std::move(terms));
}

std::size_t leaf_count(const RawExpr& e) {
  return std::visit(
      [](const auto& n) -> std::size_t {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, RawExpr::Gen>) {
          return 1;
        } else if constexpr (std::is_same_v<T, RawExpr::Deriv>) {
          return leaf_count(*n.arg);
        } else if constexpr (std::is_same_v<T, RawExpr::Prod>) {
          return leaf_count(*n.left) + leaf_count(*n.right);
        } else {
          throw std::invalid_argument("leaf count of a sum is undefined");
        }
      },
      e.node());
}

}  // namespace cgsb
