#include <doctest.h>

#include <algorithm>
#include <set>

#include "cgsb/completion.hpp"
#include "rewrite_oracle.hpp"
#include "support.hpp"

using namespace cgsb;
using namespace cgsb::testing;

namespace {

const Signature A2 = Signature::plain(2, {"a"});

RelationSet rels(const Signature& sig, const std::vector<std::string>& texts) {
  std::vector<Relation> out;
  for (std::size_t i = 0; i < texts.size(); ++i) out.push_back({"r" + std::to_string(i + 1), P(sig, texts[i])});
  return RelationSet::monic(std::move(out));
}

std::vector<std::string> texts(const Signature& sig, const RelationSet& S) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < S.size(); ++i) out.push_back(str(sig, S[i].poly));
  std::sort(out.begin(), out.end());
  return out;
}

// a_1(j_1) ... a_k(n) x as a right-normed expression tree.
ExprPtr chain(const NormalWord& a, std::uint32_t n, ExprPtr x) {
  if (a.length() == 0) return x;
  for (std::size_t p = a.length(); p-- > 0;)
    x = RawExpr::prod(p + 1 == a.length() ? n : a.join(p), RawExpr::gen(a.letter(p)), x);
  return x;
}

std::vector<NormalWord> words_upto(const Signature& sig, std::size_t max_len, std::uint32_t max_dpow) {
  std::vector<NormalWord> out;
  std::vector<Letter> letters = letters_of(sig);
  std::vector<NormalWord> frontier;
  for (Letter l : letters) frontier.push_back(NormalWord(l, 0));
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<NormalWord> next;
    for (const auto& w : frontier) {
      for (std::uint32_t d = 0; d <= max_dpow; ++d) out.push_back(append_D(w, d));
      if (len < max_len)
        for (Letter l : letters)
          for (std::uint32_t j = 0; j < sig.locality(); ++j) next.push_back(concat(w, j, NormalWord(l, 0)));
    }
    frontier = std::move(next);
  }
  return out;
}

// Leading words of every normal S-word of bounded size, each normalized by
// the rewrite oracle rather than by eval_pattern.
std::set<NormalWord> oracle_leads(const Signature& sig, const RelationSet& S, std::size_t max_len,
                                  std::uint32_t max_dpow) {
  RewriteOracle oracle(sig);
  std::set<NormalWord> leads;
  std::vector<NormalWord> free_words = words_upto(sig, max_len, 0);
  free_words.insert(free_words.begin(), NormalWord());
  std::vector<NormalWord> tails = words_upto(sig, max_len, max_dpow);
  for (std::size_t r = 0; r < S.size(); ++r) {
    const Polynomial& s = S[r].poly;
    std::size_t ls = s.leading_word().length();
    for (const auto& a : free_words) {
      if (a.length() + ls > max_len) continue;
      for (std::uint32_t n = 0; n < (a.length() ? sig.locality() : 1u); ++n) {
        for (std::uint32_t i = 0; i <= max_dpow; ++i) {
          Polynomial v = oracle.run(*chain(a, n, RawExpr::d(RawExpr::embed(s), i)));
          if (!v.is_zero()) leads.insert(v.leading_word());
        }
        if (!s.leading_word().d_free()) continue;
        for (const auto& c : tails) {
          if (a.length() + ls + c.length() > max_len) continue;
          for (std::uint32_t m = 0; m < sig.locality(); ++m) {
            Polynomial v = oracle.run(*chain(a, n, RawExpr::prod(m, RawExpr::embed(s), RawExpr::embed(c))));
            if (!v.is_zero()) leads.insert(v.leading_word());
          }
        }
      }
    }
  }
  return leads;
}

}  // namespace

TEST_CASE("reduction patterns") {
  RelationSet S = rels(A2, {"a (1) a - a (0) D a"});
  NormalWord u = W(A2, "a (0) a (1) a");
  auto found = S.find_reductions(u);
  REQUIRE(found.size() == 1);
  CHECK(found[0].kind == Pattern::Kind::Kind2);
  CHECK(found[0].a == W(A2, "a"));
  CHECK(pattern_word(S, found[0]) == u);
  // [a (0) (a (1) a - a (0) D a)] = a (0) a (1) a - a (0) a (0) D a
  CHECK(str(A2, eval_pattern(A2, S, found[0])) == "a (0) a (1) a - a (0) a (0) D a");

  NormalWord v = W(A2, "a (1) a (0) a");
  found = S.find_reductions(v);
  REQUIRE(found.size() == 1);
  CHECK(found[0].kind == Pattern::Kind::Kind1);
  CHECK(found[0].m == 0);
  CHECK(found[0].c == W(A2, "a"));

  CHECK(S.find_reductions(W(A2, "a (1) D a")).size() == 1);  // a (1) a D^1 as kind 2
  CHECK(S.find_reductions(W(A2, "a (0) a")).empty());
  CHECK_FALSE(S.reducible(W(A2, "a (0) D a")));

  Pattern bad{Pattern::Kind::Kind1, 0, W(A2, "a"), 0, 0, NormalWord(), 0};
  CHECK_THROWS_AS(eval_pattern(A2, S, bad), std::invalid_argument);
  CHECK_THROWS_AS(RelationSet({{"x", P(A2, "2 * a (1) a")}}), std::invalid_argument);
  CHECK_THROWS_AS(RelationSet({{"x", Polynomial()}}), std::invalid_argument);
}

TEST_CASE("division algorithm") {
  RelationSet S = rels(A2, {"a (1) a - a (0) D a"});
  ReductionTrace t = reduce(A2, S, P(A2, "a (1) a"), {MatchStrategy::Leftmost, true});
  CHECK(str(A2, t.remainder) == "a (0) D a");
  CHECK(t.step_count == 1);
  REQUIRE(t.steps.size() == 1);
  CHECK(t.steps[0].coeff == Rational(1));

  CHECK(str(A2, remainder(A2, S, P(A2, "a (0) a (1) a"))) == "a (0) a (0) D a");
  // D f = a (1) D a - a (0) a - a (0) D^2 a, since D a (1) a = -a (0) a.
  CHECK(str(A2, remainder(A2, S, P(A2, "a (1) D a"))) == "a (0) D^2 a + a (0) a");
  CHECK(remainder(A2, S, P(A2, "a (1) a - a (0) D a")).is_zero());
  CHECK(remainder(A2, RelationSet(), P(A2, "a (1) a")) == P(A2, "a (1) a"));
}

TEST_CASE("compositions of the one-relation presentation") {
  RelationSet S = rels(A2, {"a (1) a - a (0) D a"});
  auto recs = compositions(A2, S, 0, 0);
  std::size_t inter = 0, left = 0, right = 0;
  for (auto& r : recs) {
    if (r.type == CompositionType::Intersection) {
      ++inter;
      REQUIRE(r.w);
      CHECK(*r.w == W(A2, "a (1) a (1) a"));
      // [f (1) a] - [a (1) f], normalized independently
      RewriteOracle oracle(A2);
      ExprPtr f = RawExpr::embed(S[0].poly), a = RawExpr::gen(A2.letter("a"));
      Polynomial expect = oracle.run(*RawExpr::prod(1, f, a)) - oracle.run(*RawExpr::prod(1, a, f));
      CHECK(r.poly == expect);
    }
    if (r.type == CompositionType::LeftMult) ++left;
    if (r.type == CompositionType::RightMult) {
      ++right;
      CHECK(r.n == 2);  // f-bar is D-free and f has D-power 1: only n = N
    }
    CHECK(r.type != CompositionType::Inclusion);
  }
  CHECK(inter == 1);
  CHECK(right == 1);
  CHECK(left >= 1);

  GsbReport rep = check_gsb(A2, S);
  CHECK_FALSE(rep.is_gsb());
  CHECK(rep.nontrivial >= 1);
  bool intersection_fails = false;
  for (auto& r : rep.records)
    if (r.type == CompositionType::Intersection && r.verdict == Verdict::Nontrivial) intersection_fails = true;
  CHECK(intersection_fails);
}

TEST_CASE("check, complete and reduce the example basis") {
  RelationSet two = rels(A2, {"a (1) a - a (0) D a", "a (0) a (0) a"});
  GsbReport rep = check_gsb(A2, two);
  CHECK(rep.is_gsb());
  CHECK(rep.verdict() == Verdict::Trivial);

  CompletionResult res = complete(A2, rels(A2, {"a (1) a - a (0) D a"}));
  REQUIRE(res.complete);
  CHECK(texts(A2, res.basis) == std::vector<std::string>{"a (0) a (0) a", "a (1) a - a (0) D a"});
  CHECK(texts(A2, reduce_basis(A2, res.basis)) == texts(A2, res.basis));

  RelationSet five = rels(A2, {"a (1) a - a (0) D a", "a (0) a (0) a", "a (0) a (1) a", "a (1) a (0) a",
                               "a (1) a (1) a"});
  CHECK(check_gsb(A2, five).is_gsb());
  CHECK(minimalize(five).size() == 2);
  CHECK(texts(A2, reduce_basis(A2, five)) == texts(A2, two));

  CompletionLimits tight;
  tight.max_length = 2;
  CompletionResult cut = complete(A2, rels(A2, {"a (1) a - a (0) D a"}), tight);
  CHECK_FALSE(cut.complete);
  CHECK(cut.diagnostic.find("length") != std::string::npos);
}

TEST_CASE("interreduce") {
  RelationSet S = rels(A2, {"a (0) a (1) a - a (0) a (0) D a", "a (1) a - a (0) D a", "2 * a (1) a"});
  RelationSet R = interreduce(A2, S);
  CHECK(texts(A2, R) == std::vector<std::string>{"a (0) D a", "a (1) a"});
}

TEST_CASE("irreducible words against an oracle") {
  RelationSet two = rels(A2, {"a (1) a - a (0) D a", "a (0) a (0) a"});
  IrrBounds b;
  b.max_length = 3;
  b.max_dpow = 1;
  auto irr = irr_enumerate(A2, two, b);
  std::vector<std::string> got;
  for (const auto& w : irr) got.push_back(print_word(A2, w));
  CHECK(got == std::vector<std::string>{"a", "D a", "a (0) a", "a (0) D a"});

  auto leads = oracle_leads(A2, two, 3, 1);
  std::vector<NormalWord> expect;
  for (const auto& w : words_upto(A2, 3, 1))
    if (!leads.count(w)) expect.push_back(w);
  std::sort(expect.begin(), expect.end());
  CHECK(irr == expect);

  auto kd = kd_basis(A2, two, b);
  REQUIRE(kd.size() == 2);
  CHECK(print_word(A2, kd[1]) == "a (0) a");
  CHECK_THROWS_AS(kd_basis(A2, rels(A2, {"a (0) D a"}), b), std::invalid_argument);
}

TEST_CASE("irreducible words on two generators against an oracle") {
  Signature sig = two_generators(2);
  RelationSet S = rels(sig, {"b (0) a - a (0) b", "b (1) a - a (1) b + D a", "b (0) b - a"});
  IrrBounds b;
  b.max_length = 3;
  b.max_dpow = 1;
  auto leads = oracle_leads(sig, S, 3, 1);
  std::vector<NormalWord> expect;
  for (const auto& w : words_upto(sig, 3, 1))
    if (!leads.count(w)) expect.push_back(w);
  std::sort(expect.begin(), expect.end());
  CHECK(irr_enumerate(sig, S, b) == expect);
}

TEST_CASE("pattern scans and leading words") {
  RelationSet S = rels(A2, {"a (1) a - a (0) D a"});
  CHECK(S.find_reductions(W(A2, "a (0) a (0) a")).empty());
  auto m = S.find_reductions(W(A2, "a (1) a (0) D a"));
  REQUIRE(m.size() == 1);
  CHECK(m[0].kind == Pattern::Kind::Kind1);
  CHECK(m[0].a.length() == 0);
  CHECK(m[0].m == 0);
  CHECK(m[0].c == W(A2, "D a"));

  Pattern self{Pattern::Kind::Kind2, 0, NormalWord(), 0, 0, NormalWord(), 0};
  CHECK(eval_pattern(A2, S, self) == S[0].poly);
  Pattern d2{Pattern::Kind::Kind2, 0, NormalWord(), 0, 0, NormalWord(), 2};
  CHECK(eval_pattern(A2, S, d2).leading_word() == W(A2, "a (1) D^2 a"));
  auto own = S.find_reductions(S.lead(0));
  CHECK(std::find(own.begin(), own.end(), self) != own.end());

  CHECK(reduce(A2, S, S[0].poly).remainder.is_zero());
  CHECK(remainder(A2, S, P(A2, "a (0) a (0) D a")) == P(A2, "a (0) a (0) D a"));
}

TEST_CASE("completion edge cases") {
  CompletionResult empty = complete(A2, RelationSet());
  CHECK(empty.complete);
  CHECK(empty.basis.empty());

  RelationSet scaled = RelationSet::monic({{"f", P(A2, "3 * a (1) a - 3 * a (0) D a")}, {"g", P(A2, "-a (0) a (0) a")}});
  CompletionResult same = complete(A2, scaled);
  REQUIRE(same.complete);
  CHECK(texts(A2, same.basis) == std::vector<std::string>{"a (0) a (0) a", "a (1) a - a (0) D a"});

  Signature A1 = Signature::plain(1, {"a"});
  IrrBounds b;
  b.max_length = 2;
  b.max_dpow = 1;
  std::vector<std::string> got;
  for (const auto& w : irr_enumerate(A1, RelationSet(), b)) got.push_back(print_word(A1, w));
  CHECK(got == std::vector<std::string>{"a", "D a", "a (0) a", "a (0) D a"});
  CHECK(kd_basis(A1, RelationSet(), b).size() == 2);
}

TEST_CASE("minimal and reduced bases") {
  RelationSet five = rels(A2, {"a (1) a - a (0) D a", "a (0) a (0) a", "a (0) a (1) a", "a (1) a (0) a",
                               "a (1) a (1) a"});
  RelationSet M = minimalize(five);
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = 0; j < M.size(); ++j)
      if (i != j)
        for (const auto& p : M.find_reductions(M.lead(i))) CHECK(p.relation != j);
  RelationSet R = reduce_basis(A2, five);
  for (std::size_t i = 0; i < R.size(); ++i) {
    RelationSet others;
    for (std::size_t j = 0; j < R.size(); ++j)
      if (j != i) others.add(R[j]);
    const auto& terms = R[i].poly.terms();
    for (const auto& t : terms) CHECK_FALSE(others.reducible(t.word));
  }
}
