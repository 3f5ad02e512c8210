#include "cgsb/text.hpp"

namespace cgsb {

std::string print_rational(const Rational& q) { return q.get_str(); }

std::string print_word(const Signature& sig, const NormalWord& w) {
  std::string s;
  for (std::size_t i = 0; i + 1 < w.length(); ++i) {
    s += sig.spell(w.letter(i));
    s += " (" + std::to_string(w.join(i)) + ") ";
  }
  if (w.dpow() == 1) {
    s += "D ";
  } else if (w.dpow() > 1) {
    s += "D^" + std::to_string(w.dpow()) + " ";
  }
  s += sig.spell(w.tail());
  return s;
}

std::string print_canonical(const Signature& sig, const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational mag = abs(t.coeff);
    if (first) {
      if (t.coeff < 0) s += "-";
    } else {
      s += t.coeff < 0 ? " - " : " + ";
    }
    if (mag != 1) s += print_rational(mag) + " * ";
    s += print_word(sig, t.word);
    first = false;
  }
  return s;
}

}  // namespace cgsb
