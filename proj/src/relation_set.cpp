#include <algorithm>
#include <stdexcept>

#include "cgsb/gsb.hpp"
#include "cgsb/text.hpp"

namespace cgsb {

namespace {

std::uint64_t pair_key(Letter x, std::uint32_t j, Letter y) {
  std::uint64_t h = x.key * 0x9e3779b97f4a7c15ull;
  h ^= (y.key + 0x632be59bd9b4e019ull) + (h << 6) + (h >> 2);
  h ^= (j + 0x85ebca6bull) + (h << 6) + (h >> 2);
  return h;
}

const std::vector<std::size_t> kNone;

}  // namespace

RelationSet::RelationSet(std::vector<Relation> relations) {
  for (auto& r : relations) add(std::move(r));
}

RelationSet RelationSet::monic(std::vector<Relation> relations) {
  RelationSet out;
  for (auto& r : relations)
    if (!r.poly.is_zero()) out.add({std::move(r.name), make_monic(r.poly)});
  return out;
}

void RelationSet::add(Relation r) {
  if (r.poly.is_zero()) throw std::invalid_argument("relation '" + r.name + "' is zero");
  if (!r.poly.is_monic()) throw std::invalid_argument("relation '" + r.name + "' is not monic");
  rels_.push_back(std::move(r));
  index(rels_.size() - 1);
}

void RelationSet::index(std::size_t i) {
  const NormalWord& s = lead(i);
  by_head_[s.head().key].push_back(i);
  if (s.length() == 1)
    single_[s.head().key].push_back(i);
  else
    by_pair_[pair_key(s.letter(0), s.join(0), s.letter(1))].push_back(i);
}

const std::vector<std::size_t>& RelationSet::starting_with(Letter l) const {
  auto it = by_head_.find(l.key);
  return it == by_head_.end() ? kNone : it->second;
}

void RelationSet::candidates(const NormalWord& u, std::size_t p, std::vector<std::size_t>& out) const {
  out.clear();
  if (auto it = single_.find(u.letter(p).key); it != single_.end()) out.insert(out.end(), it->second.begin(), it->second.end());
  if (p + 1 < u.length())
    if (auto it = by_pair_.find(pair_key(u.letter(p), u.join(p), u.letter(p + 1))); it != by_pair_.end())
      out.insert(out.end(), it->second.begin(), it->second.end());
  std::sort(out.begin(), out.end());
}

bool RelationSet::match_at(const NormalWord& u, std::size_t p, std::size_t r, std::vector<Pattern>* out) const {
  const NormalWord& s = lead(r);
  const std::size_t len = s.length();
  if (p + len > u.length()) return false;
  for (std::size_t k = 0; k < len; ++k) {
    if (u.letter(p + k) != s.letter(k)) return false;
    if (k + 1 < len && u.join(p + k) != s.join(k)) return false;
  }
  Pattern pat;
  pat.relation = r;
  if (p > 0) {
    pat.a = u.slice(0, p);
    pat.n = u.join(p - 1);
  }
  if (p + len < u.length()) {
    if (!s.d_free()) return false;
    pat.kind = Pattern::Kind::Kind1;
    pat.m = u.join(p + len - 1);
    pat.c = u.slice(p + len, u.length());
  } else {
    if (u.dpow() < s.dpow()) return false;
    pat.kind = Pattern::Kind::Kind2;
    pat.i = u.dpow() - s.dpow();
  }
  if (out) out->push_back(std::move(pat));
  return true;
}

std::vector<Pattern> RelationSet::find_reductions(const NormalWord& u) const {
  std::vector<Pattern> out;
  std::vector<std::size_t> cand;
  for (std::size_t p = 0; p < u.length(); ++p) {
    candidates(u, p, cand);
    for (std::size_t r : cand) match_at(u, p, r, &out);
  }
  return out;
}

std::optional<Pattern> RelationSet::first_reduction(const NormalWord& u, MatchStrategy strategy) const {
  std::vector<std::size_t> cand;
  std::vector<Pattern> found;
  const std::size_t len = u.length();
  for (std::size_t step = 0; step < len; ++step) {
    const std::size_t p = strategy == MatchStrategy::Leftmost ? step : len - 1 - step;
    candidates(u, p, cand);
    found.clear();
    for (std::size_t r : cand) match_at(u, p, r, &found);
    if (found.empty()) continue;
    // Leftmost: kind1 before kind2, then earliest relation. Rightmost mirrors both.
    auto better = [strategy](const Pattern& x, const Pattern& y) {
      if (x.kind != y.kind) return (x.kind == Pattern::Kind::Kind1) == (strategy == MatchStrategy::Leftmost);
      return strategy == MatchStrategy::Leftmost ? x.relation < y.relation : x.relation > y.relation;
    };
    return *std::min_element(found.begin(), found.end(), better);
  }
  return std::nullopt;
}

NormalWord pattern_word(const RelationSet& S, const Pattern& p) {
  const NormalWord& s = S.lead(p.relation);
  NormalWord core = p.kind == Pattern::Kind::Kind1 ? concat(s, p.m, p.c) : append_D(s, p.i);
  return concat(p.a, p.n, core);
}

Polynomial eval_pattern(const Signature& sig, const RelationSet& S, const Pattern& p) {
  const unsigned N = sig.locality();
  if (p.relation >= S.size()) throw std::invalid_argument("pattern refers to a missing relation");
  if (!p.a.empty() && (!p.a.d_free() || p.n >= N)) throw std::invalid_argument("pattern prefix must be D-free with n < N");
  const Polynomial& s = S[p.relation].poly;
  if (p.kind == Pattern::Kind::Kind1) {
    if (!s.leading_word().d_free()) throw std::invalid_argument("kind-1 pattern needs a D-free leading word");
    if (p.c.empty() || p.m >= N) throw std::invalid_argument("kind-1 pattern needs a suffix and m < N");
    return prefix(p.a, p.n, multiply(sig, s, p.m, p.c));
  }
  return prefix(p.a, p.n, apply_D(s, p.i));
}

ReductionTrace reduce(const Signature& sig, const RelationSet& S, const Polynomial& p, ReduceOptions opts) {
  ReductionTrace trace;
  Polynomial cur = p;
  std::vector<Term> rem;
  while (!cur.is_zero()) {
    NormalWord lw = cur.leading_word();
    Rational c = cur.leading_coeff();
    if (auto pat = S.first_reduction(lw, opts.strategy)) {
      cur.add_scaled(-c, eval_pattern(sig, S, *pat));
      ++trace.step_count;
      if (opts.record_steps) trace.steps.push_back({std::move(lw), std::move(*pat), std::move(c)});
    } else {
      cur.add_term(-c, lw);
      rem.push_back({std::move(lw), std::move(c)});
    }
  }
  trace.remainder = Polynomial::from_terms(std::move(rem));
  return trace;
}

Polynomial remainder(const Signature& sig, const RelationSet& S, const Polynomial& p, MatchStrategy strategy) {
  return reduce(sig, S, p, {strategy, false}).remainder;
}

std::string describe(const Signature& sig, const RelationSet& S, const Pattern& p) {
  std::string out;
  if (!p.a.empty()) out += print_word(sig, p.a) + " (" + std::to_string(p.n) + ") ";
  if (p.kind == Pattern::Kind::Kind1) {
    out += "[" + S[p.relation].name + "] (" + std::to_string(p.m) + ") " + print_word(sig, p.c);
  } else {
    if (p.i == 1) out += "D ";
    if (p.i > 1) out += "D^" + std::to_string(p.i) + " ";
    out += "[" + S[p.relation].name + "]";
  }
  return out;
}

}  // namespace cgsb
