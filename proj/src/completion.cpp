#include <algorithm>
#include <set>
#include <stdexcept>

#include "cgsb/completion.hpp"
#include "cgsb/text.hpp"

namespace cgsb {

namespace {

std::vector<Relation> sorted_by_lead(std::vector<Relation> rels) {
  std::stable_sort(rels.begin(), rels.end(),
                   [](const Relation& x, const Relation& y) { return x.poly.leading_word() < y.poly.leading_word(); });
  return rels;
}

}  // namespace

RelationSet interreduce(const Signature& sig, const RelationSet& S) {
  // Leading words first: a relation whose leading word is reducible by a
  // smaller one is replaced by its remainder, and the pass repeats until no
  // leading word changes. Tails are then brought to normal form.
  std::vector<Relation> rels = sorted_by_lead(RelationSet::monic(S.relations()).relations());
  RelationSet kept;
  while (true) {
    kept = RelationSet();
    std::vector<Relation> moved;
    for (auto& r : rels) {
      if (!kept.reducible(r.poly.leading_word())) {
        kept.add(std::move(r));
        continue;
      }
      Polynomial rem = remainder(sig, kept, r.poly);
      if (!rem.is_zero()) moved.push_back({r.name, make_monic(rem)});
    }
    if (moved.empty()) break;
    rels = kept.relations();
    for (auto& m : moved) rels.push_back(std::move(m));
    rels = sorted_by_lead(std::move(rels));
  }
  std::vector<Relation> out;
  for (const auto& r : kept.relations()) {
    Polynomial lead(r.poly.leading_word());
    out.push_back({r.name, lead + remainder(sig, kept, r.poly - lead)});
  }
  return RelationSet(std::move(out));
}

RelationSet minimalize(const RelationSet& S) {
  // A relation able to reduce f-bar has a leading word <= f-bar, so scanning
  // in ascending order only needs to look at the members already kept.
  RelationSet kept;
  for (auto& r : sorted_by_lead(S.relations()))
    if (!kept.reducible(r.poly.leading_word())) kept.add(r);
  return kept;
}

RelationSet reduce_basis(const Signature& sig, const RelationSet& S) {
  RelationSet M = minimalize(RelationSet::monic(S.relations()));
  std::vector<Relation> out;
  for (const auto& r : M.relations()) {
    Polynomial lead(r.poly.leading_word());
    Polynomial tail = r.poly - lead;
    out.push_back({r.name, lead + remainder(sig, M, tail)});
  }
  return RelationSet(std::move(out));
}

CompletionResult complete(const Signature& sig, const RelationSet& S, const CompletionLimits& limits,
                          const CheckParams& params) {
  CompletionResult res;
  RelationSet basis = interreduce(sig, RelationSet::monic(S.relations()));
  std::set<std::pair<std::string, std::string>> done;  // pairs whose compositions were all trivial
  std::size_t fresh = 0;

  for (res.rounds = 1; res.rounds <= limits.max_iters; ++res.rounds) {
    struct Candidate {
      NormalWord w;
      Polynomial poly;
    };
    std::vector<Candidate> found;
    std::vector<std::pair<std::string, std::string>> checked;
    std::vector<std::string> keys;
    for (const auto& r : basis.relations()) keys.push_back(print_canonical(sig, r.poly));

    for (std::size_t f = 0; f < basis.size(); ++f) {
      for (std::size_t g = 0; g < basis.size(); ++g) {
        auto pair = std::make_pair(keys[f], keys[g]);
        if (done.count(pair)) continue;
        auto recs = compositions(sig, basis, f, g, params);
        CheckParams local = params;
        local.boundary_probe = nullptr;
        bool all_trivial = true;
#pragma omp parallel for schedule(dynamic) if (params.parallel)
        for (std::int64_t k = 0; k < static_cast<std::int64_t>(recs.size()); ++k) classify(sig, basis, recs[k], local);
        for (auto& r : recs) {
          ++res.compositions_checked;
          if (r.verdict == Verdict::Trivial) continue;
          all_trivial = false;
          NormalWord w = r.w ? *r.w : r.poly.leading_word();
          found.push_back({std::move(w), std::move(r.trace.remainder)});
        }
        if (all_trivial) checked.push_back(std::move(pair));
      }
    }
    done.insert(checked.begin(), checked.end());

    if (found.empty()) {
      // Confirm against the final basis before declaring success.
      GsbReport rep = check_gsb(sig, basis, params);
      if (rep.is_gsb()) {
        res.complete = true;
        res.basis = basis;
        return res;
      }
      done.clear();
      continue;
    }

    std::stable_sort(found.begin(), found.end(), [](const Candidate& x, const Candidate& y) {
      if (x.w.length() != y.w.length()) return x.w.length() < y.w.length();
      return x.w < y.w;
    });
    for (auto& c : found) {
      Polynomial r = remainder(sig, basis, c.poly);
      if (r.is_zero()) continue;
      r = make_monic(r);
      if (r.leading_word().length() > limits.max_length) {
        res.basis = basis;
        res.diagnostic = "leading word length limit " + std::to_string(limits.max_length) + " exceeded by " +
                         print_word(sig, r.leading_word());
        return res;
      }
      if (basis.size() >= limits.max_basis) {
        res.basis = basis;
        res.diagnostic = "basis size limit " + std::to_string(limits.max_basis) + " reached";
        return res;
      }
      basis.add({"c" + std::to_string(++fresh), std::move(r)});
    }
    basis = interreduce(sig, basis);
  }
  res.rounds = limits.max_iters;
  res.basis = basis;
  res.diagnostic = "iteration limit " + std::to_string(limits.max_iters) + " reached";
  return res;
}

std::vector<NormalWord> irr_enumerate(const Signature& sig, const RelationSet& S, const IrrBounds& bounds) {
  std::vector<Letter> letters = bounds.letters.empty() ? plain_letters(sig) : bounds.letters;
  std::sort(letters.begin(), letters.end());
  const unsigned N = sig.locality();
  std::vector<NormalWord> out;

  std::vector<Letter> ls;
  std::vector<std::uint32_t> js;
  auto emit = [&] {
    for (std::uint32_t d = 0; d <= bounds.max_dpow; ++d) {
      NormalWord w(ls, js, d);
      if (!S.reducible(w)) out.push_back(std::move(w));
    }
  };
  auto grow = [&](auto&& self, std::size_t len) -> void {
    if (ls.size() == len) {
      emit();
      return;
    }
    for (Letter l : letters) {
      ls.push_back(l);
      if (ls.size() == len) {
        self(self, len);
      } else {
        for (std::uint32_t j = 0; j < N; ++j) {
          js.push_back(j);
          self(self, len);
          js.pop_back();
        }
      }
      ls.pop_back();
    }
  };
  for (std::size_t len = 1; len <= bounds.max_length; ++len) grow(grow, len);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NormalWord> kd_basis(const Signature& sig, const RelationSet& S, IrrBounds bounds) {
  for (const auto& r : S.relations())
    if (!r.poly.leading_word().d_free())
      throw std::invalid_argument("relation '" + r.name + "' has a leading word with a D-power");
  bounds.max_dpow = 0;
  return irr_enumerate(sig, S, bounds);
}

}  // namespace cgsb
