#pragma once

#include <random>
#include <string>
#include <vector>

#include "cgsb/normal_form.hpp"
#include "cgsb/raw_expr.hpp"
#include "cgsb/signature.hpp"
#include "cgsb/text.hpp"
#include "cgsb/word.hpp"

namespace cgsb::testing {

inline Signature two_generators(unsigned N) { return Signature::plain(N, {"a", "b"}); }

inline Polynomial P(const Signature& sig, const std::string& text) { return parse_polynomial(sig, text); }
inline NormalWord W(const Signature& sig, const std::string& text) { return parse_word(sig, text); }
inline std::string str(const Signature& sig, const Polynomial& p) { return print_canonical(sig, p); }

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
  }
  bool coin() { return uniform(0, 1) == 1; }

  Letter letter(const std::vector<Letter>& pool) { return pool[uniform(0, pool.size() - 1)]; }

  NormalWord word(const Signature& sig, const std::vector<Letter>& pool, std::size_t max_len, std::uint32_t max_dpow,
                  std::size_t min_len = 1) {
    std::size_t len = uniform(min_len, max_len);
    std::vector<Letter> ls;
    std::vector<std::uint32_t> js;
    for (std::size_t i = 0; i < len; ++i) {
      ls.push_back(letter(pool));
      if (i + 1 < len) js.push_back(static_cast<std::uint32_t>(uniform(0, sig.locality() - 1)));
    }
    return NormalWord(ls, js, static_cast<std::uint32_t>(uniform(0, max_dpow)));
  }

  NormalWord d_free_word(const Signature& sig, const std::vector<Letter>& pool, std::size_t max_len) {
    NormalWord w = word(sig, pool, max_len, 0);
    return w;
  }

  Rational coeff() {
    std::int64_t num = static_cast<std::int64_t>(uniform(1, 7)) * (coin() ? 1 : -1);
    Rational q(static_cast<long>(num), static_cast<unsigned long>(uniform(1, 3)));
    q.canonicalize();
    return q;
  }

  Polynomial poly(const Signature& sig, const std::vector<Letter>& pool, std::size_t terms, std::size_t max_len,
                  std::uint32_t max_dpow) {
    Polynomial p;
    for (std::size_t i = 0; i < terms; ++i) p.add_term(coeff(), word(sig, pool, max_len, max_dpow));
    return p;
  }

  /// Random bracketing with `leaves` generator leaves, occasional D's and
  /// product indices up to `max_index` (which may exceed N).
  ExprPtr expr(const std::vector<Letter>& pool, std::size_t leaves, std::uint64_t max_index, std::uint32_t max_d) {
    ExprPtr e;
    if (leaves == 1) {
      e = RawExpr::gen(letter(pool));
    } else {
      std::size_t left = uniform(1, leaves - 1);
      e = RawExpr::prod(static_cast<std::int64_t>(uniform(0, max_index)), expr(pool, left, max_index, max_d),
                        expr(pool, leaves - left, max_index, max_d));
    }
    if (max_d > 0 && uniform(0, 3) == 0) e = RawExpr::d(e, static_cast<std::uint32_t>(uniform(1, max_d)));
    return e;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline std::vector<Letter> letters_of(const Signature& sig) {
  std::vector<Letter> out;
  for (const auto& n : sig.names()) out.push_back(sig.letter(n.name));
  return out;
}

}  // namespace cgsb::testing
