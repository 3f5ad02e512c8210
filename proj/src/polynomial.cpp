#include "cgsb/polynomial.hpp"

#include <algorithm>

namespace cgsb {

Polynomial::Polynomial(NormalWord w, Rational c) {
  if (c != 0) terms_.push_back({std::move(w), std::move(c)});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.word > b.word; });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().word == t.word) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Rational Polynomial::coeff(const NormalWord& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const Term& t, const NormalWord& x) { return t.word > x; });
  if (it != terms_.end() && it->word == w) return it->coeff;
  return 0;
}

bool Polynomial::d_free() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.word.d_free(); });
}

std::uint32_t Polynomial::max_dpow() const {
  std::uint32_t m = 0;
  for (const auto& t : terms_) m = std::max(m, t.word.dpow());
  return m;
}

std::size_t Polynomial::max_length() const {
  std::size_t m = 0;
  for (const auto& t : terms_) m = std::max(m, t.word.length());
  return m;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

void Polynomial::add_scaled(const Rational& c, const Polynomial& q) {
  if (c == 0 || q.is_zero()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + q.terms_.size());
  auto a = terms_.begin();
  auto b = q.terms_.begin();
  while (a != terms_.end() || b != q.terms_.end()) {
    if (b == q.terms_.end() || (a != terms_.end() && a->word > b->word)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->word > a->word) {
      out.push_back({b->word, c * b->coeff});
      ++b;
    } else {
      Rational s = a->coeff + c * b->coeff;
      if (s != 0) out.push_back({std::move(a->word), std::move(s)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

void Polynomial::add_term(const Rational& c, const NormalWord& w) {
  if (c == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const Term& t, const NormalWord& x) { return t.word > x; });
  if (it != terms_.end() && it->word == w) {
    it->coeff += c;
    if (it->coeff == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Term{w, c});
  }
}

std::optional<NormalWord> leading(const Polynomial& p) {
  if (p.is_zero()) return std::nullopt;
  return p.leading_word();
}

Polynomial make_monic(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("cannot make the zero polynomial monic");
  Rational inv = 1 / p.leading_coeff();
  return inv * p;
}

}  // namespace cgsb
