#include <doctest.h>

#include <algorithm>
#include <set>

#include "cgsb/completion.hpp"
#include "cgsb/window.hpp"
#include "rewrite_oracle.hpp"
#include "support.hpp"

using namespace cgsb;
using namespace cgsb::testing;

namespace {

struct Case {
  unsigned N;
  std::vector<std::string> rels;
};

// Small presentations whose completion terminates quickly.
const std::vector<Case> kCases = {
    {2, {"a (1) a - a (0) D a"}},
    {2, {"b (1) a - a (0) D b"}},
    {1, {"b (0) b - a (0) a"}},
    {3, {"a (2) a - a (0) D a"}},
    {2, {"b (1) b - a (0) a", "b (0) a"}},
};

RelationSet monic_set(const Signature& sig, const std::vector<std::string>& texts) {
  std::vector<Relation> out;
  for (std::size_t i = 0; i < texts.size(); ++i) out.push_back({"r" + std::to_string(i + 1), P(sig, texts[i])});
  return RelationSet::monic(std::move(out));
}

struct Completed {
  Signature sig;
  RelationSet basis;
};

const std::vector<Completed>& completed() {
  static const std::vector<Completed> all = [] {
    std::vector<Completed> out;
    for (const auto& c : kCases) {
      Signature sig = two_generators(c.N);
      CompletionLimits lim;
      lim.max_length = 6;
      CompletionResult res = complete(sig, monic_set(sig, c.rels), lim);
      REQUIRE(res.complete);
      out.push_back({sig, res.basis});
    }
    return out;
  }();
  return all;
}

ExprPtr chain(const NormalWord& a, std::uint32_t n, ExprPtr x) {
  for (std::size_t p = a.length(); p-- > 0;)
    x = RawExpr::prod(p + 1 == a.length() ? n : a.join(p), RawExpr::gen(a.letter(p)), x);
  return x;
}

Pattern random_pattern(Gen& g, const Signature& sig, const RelationSet& S) {
  std::vector<Letter> pool = letters_of(sig);
  Pattern p;
  p.relation = g.uniform(0, S.size() - 1);
  if (g.coin()) {
    p.a = g.word(sig, pool, 2, 0);
    p.n = static_cast<std::uint32_t>(g.uniform(0, sig.locality() - 1));
  }
  if (S.lead(p.relation).d_free() && g.coin()) {
    p.kind = Pattern::Kind::Kind1;
    p.m = static_cast<std::uint32_t>(g.uniform(0, sig.locality() - 1));
    p.c = g.word(sig, pool, 2, 2);
  } else {
    p.kind = Pattern::Kind::Kind2;
    p.i = static_cast<std::uint32_t>(g.uniform(0, 2));
  }
  return p;
}

ExprPtr pattern_expr(const RelationSet& S, const Pattern& p) {
  ExprPtr s = RawExpr::embed(S[p.relation].poly);
  ExprPtr inner = p.kind == Pattern::Kind::Kind1 ? RawExpr::prod(p.m, s, RawExpr::embed(p.c)) : RawExpr::d(s, p.i);
  return chain(p.a, p.n, inner);
}

// Random monic relations with D-free leading words over two generators.
RelationSet random_set(Gen& g, const Signature& sig) {
  std::vector<Letter> pool = letters_of(sig);
  std::vector<Relation> rels;
  std::size_t count = g.uniform(1, 3);
  for (std::size_t k = 0; k < count; ++k) {
    Polynomial p = g.poly(sig, pool, 3, 3, 1);
    if (p.is_zero()) continue;
    rels.push_back({"s" + std::to_string(k), p});
  }
  if (rels.empty()) rels.push_back({"s", P(sig, "a (0) b")});
  return RelationSet::monic(std::move(rels));
}

}  // namespace

TEST_CASE("normal S-words have the declared leading word and agree with the oracle") {
  Gen g(101);
  std::size_t cases = 0;
  for (unsigned N = 1; N <= 3; ++N) {
    Signature sig = two_generators(N);
    RewriteOracle oracle(sig);
    for (int round = 0; round < 1400; ++round) {
      RelationSet S = random_set(g, sig);
      Pattern p = random_pattern(g, sig, S);
      Polynomial v = eval_pattern(sig, S, p);
      REQUIRE_FALSE(v.is_zero());
      CHECK(v.leading_word() == pattern_word(S, p));
      CHECK(v.leading_coeff() == Rational(1));
      if (round % 4 == 0) CHECK(oracle.run(*pattern_expr(S, p)) == v);
      ++cases;
    }
  }
  CHECK(cases >= 4000);
}

TEST_CASE("D acts on normal S-words by raising the tail") {
  Gen g(202);
  for (unsigned N = 1; N <= 3; ++N) {
    Signature sig = two_generators(N);
    for (int round = 0; round < 400; ++round) {
      RelationSet S = random_set(g, sig);
      Pattern p = random_pattern(g, sig, S);
      Polynomial v = eval_pattern(sig, S, p);
      std::uint32_t k = static_cast<std::uint32_t>(g.uniform(1, 2));
      Polynomial dv = apply_D(v, k);
      REQUIRE_FALSE(dv.is_zero());
      // D^k [a(n) s (m) c] has leading word a(n) s-bar (m) c D^k; likewise for kind 2.
      CHECK(dv.leading_word() == append_D(pattern_word(S, p), k));
      Pattern q = p;
      if (q.kind == Pattern::Kind::Kind1)
        q.c = append_D(q.c, k);
      else
        q.i += k;
      CHECK(dv.leading_word() == pattern_word(S, q));
    }
  }
}

TEST_CASE("reduction traces are sound, remainders irreducible and stable") {
  Gen g(303);
  for (unsigned N = 1; N <= 3; ++N) {
    Signature sig = two_generators(N);
    std::vector<Letter> pool = letters_of(sig);
    for (int round = 0; round < 400; ++round) {
      RelationSet S = random_set(g, sig);
      Polynomial p = g.poly(sig, pool, 4, 3, 2);
      if (p.is_zero()) continue;
      auto strategy = g.coin() ? MatchStrategy::Leftmost : MatchStrategy::Rightmost;
      ReductionTrace t = reduce(sig, S, p, {strategy, true});
      Polynomial sum = t.remainder;
      for (const auto& s : t.steps) {
        CHECK(s.word <= p.leading_word());
        CHECK(pattern_word(S, s.pattern) == s.word);
        sum.add_scaled(s.coeff, eval_pattern(sig, S, s.pattern));
      }
      CHECK(sum == p);
      const auto& terms = t.remainder.terms();
      for (const auto& term : terms) CHECK_FALSE(S.reducible(term.word));
      CHECK(remainder(sig, S, t.remainder) == t.remainder);
    }
  }
}

TEST_CASE("completed bases are confluent under both match strategies") {
  Gen g(404);
  std::size_t compared = 0;
  for (const auto& c : completed()) {
    std::vector<Letter> pool = letters_of(c.sig);
    for (int round = 0; round < 250; ++round) {
      Polynomial p = g.poly(c.sig, pool, 5, 4, 2);
      CHECK(remainder(c.sig, c.basis, p, MatchStrategy::Leftmost) ==
            remainder(c.sig, c.basis, p, MatchStrategy::Rightmost));
      ++compared;
    }
  }
  CHECK(compared >= 1000);
}

TEST_CASE("ideal members reduce to zero, irreducible combinations never do") {
  Gen g(505);
  std::size_t members = 0, irr_checked = 0;
  for (const auto& c : completed()) {
    IrrBounds bounds;
    bounds.max_length = 3;
    bounds.max_dpow = 2;
    auto irr = irr_enumerate(c.sig, c.basis, bounds);
    REQUIRE_FALSE(irr.empty());
    for (int round = 0; round < 250; ++round) {
      Polynomial h;
      std::size_t terms = g.uniform(1, 4);
      for (std::size_t k = 0; k < terms; ++k)
        h.add_scaled(g.coeff(), eval_pattern(c.sig, c.basis, random_pattern(g, c.sig, c.basis)));
      CHECK(remainder(c.sig, c.basis, h).is_zero());
      ++members;

      Polynomial q;
      while (q.is_zero()) {
        std::size_t n = g.uniform(1, 4);
        for (std::size_t k = 0; k < n; ++k) q.add_term(g.coeff(), irr[g.uniform(0, irr.size() - 1)]);
      }
      Polynomial r = remainder(c.sig, c.basis, q);
      CHECK(r == q);
      CHECK_FALSE(r.is_zero());
      ++irr_checked;
    }
  }
  CHECK(members >= 1000);
  CHECK(irr_checked >= 1000);
}

TEST_CASE("reduced basis is invariant under permutation and rescaling") {
  Gen g(606);
  for (const auto& c : completed()) {
    RelationSet expect = reduce_basis(c.sig, c.basis);
    for (int round = 0; round < 20; ++round) {
      std::vector<Relation> rels = c.basis.relations();
      std::shuffle(rels.begin(), rels.end(), g.engine());
      // Rescale and add multiples of other members to the tails.
      for (auto& r : rels) {
        r.poly *= g.coeff();
      }
      std::vector<Relation> mixed;
      for (std::size_t k = 0; k < rels.size(); ++k) {
        Polynomial p = rels[k].poly;
        for (std::size_t l = 0; l < rels.size(); ++l)
          if (rels[l].poly.leading_word() < rels[k].poly.leading_word() && g.coin())
            p.add_scaled(g.coeff(), rels[l].poly);
        mixed.push_back({rels[k].name, p});
      }
      RelationSet got = reduce_basis(c.sig, RelationSet::monic(mixed));
      REQUIRE(got.size() == expect.size());
      for (std::size_t k = 0; k < got.size(); ++k) CHECK(got[k].poly == expect[k].poly);
    }
  }
}

TEST_CASE("serial and parallel checks agree") {
  for (const auto& c : completed()) {
    GsbReport a = check_gsb_serial(c.sig, c.basis), b = check_gsb_parallel(c.sig, c.basis);
    CHECK(a.is_gsb());
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t k = 0; k < a.records.size(); ++k) {
      CHECK(a.records[k].poly == b.records[k].poly);
      CHECK(a.records[k].verdict == b.records[k].verdict);
    }
  }
  Presentation vir = builtin("virasoro");
  WindowedSystem sys = instantiate_window(vir, {2, 3});
  GsbReport a = check_gsb_serial(vir.sig, sys.set, sys.params());
  GsbReport b = check_gsb_parallel(vir.sig, sys.set, sys.params());
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t k = 0; k < a.records.size(); ++k) {
    CHECK(a.records[k].trace.remainder == b.records[k].trace.remainder);
    CHECK(a.records[k].verdict == b.records[k].verdict);
  }
}

TEST_CASE("composition-diamond consistency on random presentations") {
  // A set that passes check_gsb must behave like a GSB: members of its ideal
  // built from normal S-words reduce to zero.
  Gen g(707);
  std::size_t gsb_seen = 0;
  for (int round = 0; round < 300; ++round) {
    Signature sig = two_generators(static_cast<unsigned>(g.uniform(1, 2)));
    RelationSet S = random_set(g, sig);
    if (!check_gsb(sig, S).is_gsb()) continue;
    ++gsb_seen;
    for (int k = 0; k < 10; ++k) {
      Polynomial h;
      for (int t = 0; t < 3; ++t) h.add_scaled(g.coeff(), eval_pattern(sig, S, random_pattern(g, sig, S)));
      CHECK(remainder(sig, S, h).is_zero());
    }
  }
  CHECK(gsb_seen > 0);
}

TEST_CASE("equal leading words and products of S-words stay in the ideal") {
  Gen g(808);
  std::size_t pairs = 0;
  for (const auto& c : completed()) {
    std::vector<Letter> pool = letters_of(c.sig);
    for (int round = 0; round < 150; ++round) {
      Pattern p1 = random_pattern(g, c.sig, c.basis);
      NormalWord w = pattern_word(c.basis, p1);
      Polynomial e1 = eval_pattern(c.sig, c.basis, p1);
      for (const auto& p2 : c.basis.find_reductions(w)) {
        ReductionTrace t = reduce(c.sig, c.basis, eval_pattern(c.sig, c.basis, p2) - e1, {MatchStrategy::Leftmost, true});
        CHECK(t.remainder.is_zero());
        for (const auto& s : t.steps) CHECK(s.word < w);
        ++pairs;
      }
      // Products [S-word] (n) [u] lie in Id(S).
      NormalWord u = g.word(c.sig, pool, 2, 2);
      std::uint64_t n = g.uniform(0, c.sig.locality() + 1);
      CHECK(remainder(c.sig, c.basis, multiply(c.sig, e1, n, Polynomial(u))).is_zero());
      CHECK(remainder(c.sig, c.basis, multiply(c.sig, Polynomial(u), n, e1)).is_zero());
    }
  }
  CHECK(pairs >= 750);
}
