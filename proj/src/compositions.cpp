#include <algorithm>
#include <stdexcept>

#include "cgsb/completion.hpp"

namespace cgsb {

const char* to_string(CompositionType t) {
  switch (t) {
    case CompositionType::Inclusion: return "inclusion";
    case CompositionType::RightInclusion: return "right-inclusion";
    case CompositionType::Intersection: return "intersection";
    case CompositionType::RightIntersection: return "right-intersection";
    case CompositionType::LeftMult: return "left-mult";
    case CompositionType::RightMult: return "right-mult";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Trivial: return "trivial";
    case Verdict::Nontrivial: return "nontrivial";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::vector<Letter> plain_letters(const Signature& sig) {
  std::vector<Letter> out;
  for (const auto& g : sig.names()) {
    if (g.indexed) throw std::invalid_argument("family '" + g.name + "' needs an explicit generator window");
    out.push_back(sig.letter(g.name));
  }
  return out;
}

namespace {

// big[p .. p+k) equals small[0 .. k) letter by letter, with the k-1 inner joins.
bool agree(const NormalWord& big, std::size_t p, const NormalWord& small, std::size_t k) {
  for (std::size_t t = 0; t < k; ++t) {
    if (big.letter(p + t) != small.letter(t)) return false;
    if (t + 1 < k && big.join(p + t) != small.join(t)) return false;
  }
  return true;
}

void set_prefix(Pattern& via, const NormalWord& w, std::size_t p) {
  if (p == 0) return;
  via.a = w.slice(0, p);
  via.n = w.join(p - 1);
}

// Overlaps of g-bar placed at position p of f-bar (or of a word starting with f-bar).
void overlaps_at(const RelationSet& S, std::size_t f, std::size_t g, std::size_t p,
                 std::vector<CompositionRecord>& out) {
  const NormalWord& F = S.lead(f);
  const NormalWord& G = S.lead(g);
  const std::size_t lf = F.length(), lg = G.length();

  auto record = [&](CompositionType type, NormalWord w, Pattern via) {
    CompositionRecord r;
    r.type = type;
    r.f = f;
    r.g = g;
    r.w = std::move(w);
    via.relation = g;
    r.via = std::move(via);
    out.push_back(std::move(r));
  };

  if (p + lg < lf) {
    // inclusion: f-bar = a(n) g-bar (m) c
    if (G.d_free() && agree(F, p, G, lg)) {
      Pattern via;
      via.kind = Pattern::Kind::Kind1;
      set_prefix(via, F, p);
      via.m = F.join(p + lg - 1);
      via.c = F.slice(p + lg, lf);
      record(CompositionType::Inclusion, F, std::move(via));
    }
  } else if (p + lg == lf) {
    if (agree(F, p, G, lg)) {
      Pattern via;
      set_prefix(via, F, p);
      if (F.dpow() >= G.dpow()) {
        // right inclusion: f-bar = a(n) g-bar D^i; the identical self-match is skipped
        via.kind = Pattern::Kind::Kind2;
        via.i = F.dpow() - G.dpow();
        if (!(f == g && p == 0)) record(CompositionType::RightInclusion, F, std::move(via));
      } else if (p > 0) {
        // right intersection: f-bar D^i = a(n) g-bar, i > 0
        via.i = G.dpow() - F.dpow();
        record(CompositionType::RightIntersection, append_D(F, via.i), std::move(via));
      }
    }
  } else if (p > 0 && F.d_free()) {
    // intersection: f-bar (m) c = a(n) g-bar with a proper overlap
    const std::size_t k = lf - p;
    if (agree(F, p, G, k)) {
      Pattern via;
      set_prefix(via, F, p);
      via.m = G.join(k - 1);
      via.c = G.slice(k, lg);
      NormalWord w = concat(F, via.m, via.c);
      record(CompositionType::Intersection, std::move(w), std::move(via));
    }
  }
}

bool is_active(const CheckParams& params, std::size_t i) {
  return params.active.empty() || std::binary_search(params.active.begin(), params.active.end(), i);
}

std::vector<Letter> multipliers(const Signature& sig, const CheckParams& params) {
  return params.multipliers.empty() ? plain_letters(sig) : params.multipliers;
}

void multiplication_records(const Signature& sig, const RelationSet& S, std::size_t f, const CheckParams& params,
                            std::vector<CompositionRecord>& out) {
  const unsigned N = sig.locality();
  const Polynomial& poly = S[f].poly;
  const auto bs = multipliers(sig, params);
  if (bs.empty()) return;

  std::uint64_t left = N;
  for (const auto& t : poly.terms()) left = std::max<std::uint64_t>(left, locality_bound(sig, NormalWord(bs.front()), t.word));
  left = std::max<std::uint64_t>(left, params.left_mult_bound);

  std::uint64_t right_lo = poly.leading_word().d_free() ? N : 0;
  std::uint64_t right_hi = poly.d_free() ? N : std::max<std::uint64_t>(N + poly.max_dpow(), params.right_mult_bound);

  for (Letter b : bs) {
    for (std::uint64_t n = N; n < left; ++n) {
      CompositionRecord r;
      r.type = CompositionType::LeftMult;
      r.f = r.g = f;
      r.b = b;
      r.n = n;
      out.push_back(std::move(r));
    }
    for (std::uint64_t n = right_lo; n < right_hi; ++n) {
      CompositionRecord r;
      r.type = CompositionType::RightMult;
      r.f = r.g = f;
      r.b = b;
      r.n = n;
      out.push_back(std::move(r));
    }
  }
}

void fill(const Signature& sig, const RelationSet& S, CompositionRecord& r) {
  const Polynomial& f = S[r.f].poly;
  const Polynomial& g = S[r.g].poly;
  switch (r.type) {
    case CompositionType::Inclusion:
    case CompositionType::RightInclusion:
      r.poly = f - eval_pattern(sig, S, r.via);
      break;
    case CompositionType::Intersection:
      r.poly = multiply(sig, f, r.via.m, r.via.c) - prefix(r.via.a, r.via.n, g);
      break;
    case CompositionType::RightIntersection:
      r.poly = apply_D(f, r.via.i) - prefix(r.via.a, r.via.n, g);
      break;
    case CompositionType::LeftMult:
      r.poly = multiply(sig, Polynomial(NormalWord(*r.b)), r.n, f);
      break;
    case CompositionType::RightMult:
      r.poly = multiply(sig, f, r.n, NormalWord(*r.b));
      break;
  }
}

// Records in a fixed order: for each active f, overlaps by position and
// partner, then the multiplication compositions of f. Polynomials not filled.
std::vector<CompositionRecord> enumerate(const Signature& sig, const RelationSet& S, const CheckParams& params) {
  std::vector<CompositionRecord> out;
  std::vector<std::size_t> partners;
  for (std::size_t f = 0; f < S.size(); ++f) {
    if (!is_active(params, f)) continue;
    const NormalWord& F = S.lead(f);
    for (std::size_t p = 0; p < F.length(); ++p) {
      partners = S.starting_with(F.letter(p));
      std::sort(partners.begin(), partners.end());
      for (std::size_t g : partners)
        if (is_active(params, g)) overlaps_at(S, f, g, p, out);
    }
    multiplication_records(sig, S, f, params, out);
  }
  return out;
}

}  // namespace

std::vector<CompositionRecord> compositions(const Signature& sig, const RelationSet& S, std::size_t f, std::size_t g,
                                            const CheckParams& params) {
  std::vector<CompositionRecord> out;
  for (std::size_t p = 0; p < S.lead(f).length(); ++p) overlaps_at(S, f, g, p, out);
  if (f == g) multiplication_records(sig, S, f, params, out);
  for (auto& r : out) fill(sig, S, r);
  return out;
}

std::vector<CompositionRecord> all_compositions(const Signature& sig, const RelationSet& S, const CheckParams& params) {
  auto out = enumerate(sig, S, params);
  for (auto& r : out) fill(sig, S, r);
  return out;
}

void classify(const Signature& sig, const RelationSet& S, CompositionRecord& c, const CheckParams& params) {
  c.trace = reduce(sig, S, c.poly, {params.strategy, params.record_steps});
  if (c.trace.remainder.is_zero()) {
    c.verdict = Verdict::Trivial;
    return;
  }
  c.verdict = Verdict::Nontrivial;
  if (params.boundary_probe)
    for (const auto& t : c.trace.remainder.terms())
      if (params.boundary_probe(t.word)) {
        c.verdict = Verdict::Inconclusive;
        break;
      }
}

bool is_trivial(const Signature& sig, const RelationSet& S, const Polynomial& h) {
  return remainder(sig, S, h).is_zero();
}

namespace {

GsbReport tally(std::vector<CompositionRecord> records) {
  GsbReport rep;
  for (const auto& r : records) {
    ++rep.counts[static_cast<int>(r.type)];
    if (r.verdict == Verdict::Nontrivial) ++rep.nontrivial;
    if (r.verdict == Verdict::Inconclusive) ++rep.inconclusive;
  }
  rep.records = std::move(records);
  return rep;
}

}  // namespace

GsbReport check_gsb_serial(const Signature& sig, const RelationSet& S, const CheckParams& params) {
  auto records = enumerate(sig, S, params);
  for (auto& r : records) {
    fill(sig, S, r);
    classify(sig, S, r, params);
  }
  return tally(std::move(records));
}

GsbReport check_gsb_parallel(const Signature& sig, const RelationSet& S, const CheckParams& params) {
  auto records = enumerate(sig, S, params);
  const auto count = static_cast<std::int64_t>(records.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t k = 0; k < count; ++k) {
    fill(sig, S, records[k]);
    classify(sig, S, records[k], params);
  }
  return tally(std::move(records));
}

GsbReport check_gsb(const Signature& sig, const RelationSet& S, const CheckParams& params) {
  return params.parallel ? check_gsb_parallel(sig, S, params) : check_gsb_serial(sig, S, params);
}

}  // namespace cgsb
