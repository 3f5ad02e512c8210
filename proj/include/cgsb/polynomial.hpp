#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <vector>

#include "cgsb/word.hpp"

namespace cgsb {

using Rational = mpq_class;

struct Term {
  NormalWord word;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Finite rational combination of normal words.
///
/// Terms are kept sorted strictly descending by word order with no zero
/// coefficients, so terms().front() is the leading term.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(NormalWord w, Rational c = 1);

  /// Sorts, merges equal words and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Precondition: nonzero.
  const NormalWord& leading_word() const { return terms_.front().word; }
  const Rational& leading_coeff() const { return terms_.front().coeff; }
  Rational coeff(const NormalWord& w) const;

  bool is_monic() const { return !is_zero() && leading_coeff() == 1; }
  /// Every monomial word is D-free.
  bool d_free() const;
  std::uint32_t max_dpow() const;
  std::size_t max_length() const;

  Polynomial& operator+=(const Polynomial& q) { add_scaled(1, q); return *this; }
  Polynomial& operator-=(const Polynomial& q) { add_scaled(-1, q); return *this; }
  Polynomial& operator*=(const Rational& c);
  /// this += c * q.
  void add_scaled(const Rational& c, const Polynomial& q);
  /// this += c * w.
  void add_term(const Rational& c, const NormalWord& w);

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator-(Polynomial p) { return p *= -1; }
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Term> terms_;
};

/// Leading word with the zero polynomial mapped to nullopt; nullopt sits
/// below every word.
std::optional<NormalWord> leading(const Polynomial& p);

Polynomial make_monic(const Polynomial& p);

inline Polynomial scale(const Polynomial& p, const Rational& c) { return c * p; }

}  // namespace cgsb
