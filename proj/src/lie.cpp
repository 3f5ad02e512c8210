#include <algorithm>
#include <set>
#include <stdexcept>

#include "cgsb/lie.hpp"
#include "cgsb/text.hpp"

namespace cgsb {

namespace {

Rational inverse_factorial(std::uint32_t k) {
  mpz_class f = falling_factorial(k, k);
  return Rational(mpz_class(1), f);
}

}  // namespace

KDElement KDElement::from_polynomial(const Polynomial& p) {
  KDElement e;
  for (const auto& t : p.terms()) {
    if (t.word.length() != 1) throw std::invalid_argument("k[D]-element must be a combination of D^t b");
    e.add(t.coeff, t.word.tail(), t.word.dpow());
  }
  return e;
}

void KDElement::add(const Rational& c, Letter b, std::uint32_t dpow) {
  if (c == 0) return;
  auto key = [](const KDTerm& t) { return std::make_pair(t.b, t.dpow); };
  auto it = std::lower_bound(terms_.begin(), terms_.end(), std::make_pair(b, dpow),
                             [&](const KDTerm& t, const auto& k) { return key(t) < k; });
  if (it != terms_.end() && it->b == b && it->dpow == dpow) {
    it->coeff += c;
    if (it->coeff == 0) terms_.erase(it);
  } else {
    terms_.insert(it, KDTerm{b, dpow, c});
  }
}

KDElement& KDElement::operator+=(const KDElement& o) {
  for (const auto& t : o.terms_) add(t.coeff, t.b, t.dpow);
  return *this;
}

KDElement& KDElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

KDElement KDElement::derive(std::uint32_t k) const {
  KDElement e = *this;
  for (auto& t : e.terms_) t.dpow += k;
  return e;
}

Polynomial KDElement::to_polynomial() const {
  std::vector<Term> ts;
  for (const auto& t : terms_) ts.push_back({NormalWord(t.b, t.dpow), t.coeff});
  return Polynomial::from_terms(std::move(ts));
}

KDElement skew(const LieTable& table, Letter x, std::uint32_t n, Letter y) {
  KDElement out;
  for (std::uint32_t k = 0; n + k < table.locality(); ++k) {
    KDElement term = table(x, n + k, y).derive(k);
    Rational c = inverse_factorial(k);
    if ((n + k) % 2 == 0) c = -c;  // -(-1)^{n+k}
    term *= c;
    out += term;
  }
  return out;
}

Polynomial conjugate(const Signature& sig, const Polynomial& y, std::uint32_t n, const Polynomial& x) {
  std::uint64_t bound = 0;
  for (const auto& s : y.terms())
    for (const auto& t : x.terms()) bound = std::max(bound, locality_bound(sig, s.word, t.word));
  Polynomial out;
  for (std::uint32_t k = 0; n + k < bound; ++k) {
    Polynomial term = apply_D(multiply(sig, y, n + k, x), k);
    Rational c = inverse_factorial(k);
    if ((n + k) % 2 == 1) c = -c;
    out.add_scaled(c, term);
  }
  return out;
}

Polynomial conjugate(const Signature& sig, Letter y, std::uint32_t n, Letter x) {
  return conjugate(sig, Polynomial(NormalWord(y)), n, Polynomial(NormalWord(x)));
}

Polynomial enveloping_relation(const Signature& sig, const LieTable& table, Letter x, std::uint32_t n, Letter y) {
  for (Letter l : {x, y})
    if (!sig.contains(l)) throw SignatureError("table entry references an unknown generator");
  KDElement br = table(x, n, y);
  for (const auto& t : br.terms())
    if (!sig.contains(t.b)) throw SignatureError("table value references an unknown generator");
  return multiply(sig, NormalWord(x), n, NormalWord(y)) - conjugate(sig, y, n, x) -
         br.to_polynomial();
}

std::vector<Relation> enveloping_presentation(const Signature& sig, const LieTable& table,
                                              const std::vector<Letter>& letters) {
  std::vector<Relation> out;
  std::set<std::string> seen;
  for (Letter x : letters)
    for (Letter y : letters)
      for (std::uint32_t n = 0; n < sig.locality(); ++n) {
        Polynomial p = enveloping_relation(sig, table, x, n, y);
        if (p.is_zero()) continue;
        p = make_monic(p);
        if (!seen.insert(print_canonical(sig, p)).second) continue;
        out.push_back({"f" + std::to_string(n) + "[" + sig.spell(x) + "," + sig.spell(y) + "]", std::move(p)});
      }
  return out;
}

}  // namespace cgsb
