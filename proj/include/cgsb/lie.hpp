#pragma once

#include <functional>
#include <vector>

#include "cgsb/gsb.hpp"

namespace cgsb {

struct KDTerm {
  Letter b;
  std::uint32_t dpow = 0;
  Rational coeff;

  friend bool operator==(const KDTerm&, const KDTerm&) = default;
};

/// Finite combination of D^t b over generators: an element of the free k[D]-module on B.
class KDElement {
 public:
  KDElement() = default;
  /// Throws std::invalid_argument if some word has length > 1.
  static KDElement from_polynomial(const Polynomial& p);

  void add(const Rational& c, Letter b, std::uint32_t dpow = 0);
  KDElement& operator+=(const KDElement& o);
  KDElement& operator*=(const Rational& c);
  /// D^k applied termwise.
  KDElement derive(std::uint32_t k) const;

  bool is_zero() const { return terms_.empty(); }
  const std::vector<KDTerm>& terms() const { return terms_; }
  Polynomial to_polynomial() const;

  friend bool operator==(const KDElement&, const KDElement&) = default;

 private:
  std::vector<KDTerm> terms_;  // sorted by (b, dpow)
};

/// Multiplication table x[n]y of a Lie conformal algebra that is free over k[D]
/// on its generators; entries are defined for n < N and vanish beyond.
class LieTable {
 public:
  using Bracket = std::function<KDElement(Letter x, std::uint32_t n, Letter y)>;

  LieTable(unsigned locality, Bracket bracket) : locality_(locality), bracket_(std::move(bracket)) {}

  unsigned locality() const { return locality_; }
  KDElement operator()(Letter x, std::uint32_t n, Letter y) const {
    return n < locality_ ? bracket_(x, n, y) : KDElement{};
  }

 private:
  unsigned locality_;
  Bracket bracket_;
};

/// y[n]x obtained from the x[m]y entries by skew-symmetry:
///   y[n]x = -sum_{k>=0} (-1)^{n+k} / k! D^k (x[n+k]y).
KDElement skew(const LieTable& table, Letter x, std::uint32_t n, Letter y);

/// {y(n)x} = sum_{k>=0} (-1)^{n+k} / k! D^k (y(n+k)x), normalized.
Polynomial conjugate(const Signature& sig, const Polynomial& y, std::uint32_t n, const Polynomial& x);
Polynomial conjugate(const Signature& sig, Letter y, std::uint32_t n, Letter x);

/// x(n)y - {y(n)x} - x[n]y.
Polynomial enveloping_relation(const Signature& sig, const LieTable& table, Letter x, std::uint32_t n, Letter y);

/// Monic enveloping relations over all ordered pairs of `letters` and n < N,
/// zero and duplicate relations dropped. Named f<n>[x,y].
std::vector<Relation> enveloping_presentation(const Signature& sig, const LieTable& table,
                                              const std::vector<Letter>& letters);

}  // namespace cgsb
