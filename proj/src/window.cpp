#include "cgsb/window.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>

#include "cgsb/text.hpp"

namespace cgsb {

namespace {

struct Collected {
  std::vector<Relation> rels;
  std::vector<std::int64_t> spread;
  std::map<std::string, std::size_t> seen;

  void add(const Signature& sig, Relation r, std::int64_t s) {
    if (r.poly.is_zero()) return;
    r.poly = make_monic(r.poly);
    auto [it, fresh] = seen.emplace(print_canonical(sig, r.poly), rels.size());
    if (!fresh) {
      spread[it->second] = std::min(spread[it->second], s);
      return;
    }
    rels.push_back(std::move(r));
    spread.push_back(s);
  }
};

std::int64_t letter_spread(const Signature& sig, Letter l) {
  auto i = sig.index_of(l);
  return i ? (*i < 0 ? -*i : *i) : 0;
}

Collected collect_schemas(const Presentation& p, std::int64_t radius) {
  Collected c;
  for (const auto& r : p.relations) c.add(p.sig, r, 0);
  for (const auto& s : p.schemas)
    for (auto& inst : instantiate_schema(p.sig, s, -radius, radius)) c.add(p.sig, std::move(inst.relation), inst.spread);
  return c;
}

Collected collect_enveloping(const Presentation& p, std::int64_t radius) {
  Collected c;
  LieTable table = lie_table(p);
  std::vector<Letter> letters = window_letters(p.sig, -radius, radius);
  for (Letter x : letters)
    for (Letter y : letters)
      for (std::uint32_t n = 0; n < p.sig.locality(); ++n) {
        Polynomial rel = enveloping_relation(p.sig, table, x, n, y);
        std::string name = "f" + std::to_string(n) + "[" + p.sig.spell(x) + "," + p.sig.spell(y) + "]";
        c.add(p.sig, {std::move(name), std::move(rel)}, std::max(letter_spread(p.sig, x), letter_spread(p.sig, y)));
      }
  return c;
}

WindowedSystem build(const Presentation& p, IndexWindow w, Collected (*collect)(const Presentation&, std::int64_t)) {
  if (w.W < 0 || w.M < 1) throw std::invalid_argument("window needs W >= 0 and M >= 1");
  WindowedSystem sys;
  sys.sig = p.sig;
  sys.window = w;
  Collected c = collect(p, w.radius());
  for (std::size_t i = 0; i < c.rels.size(); ++i)
    if (c.spread[i] <= w.W) sys.active.push_back(i);
  sys.set = RelationSet(std::move(c.rels));
  sys.letters = window_letters(p.sig, -w.W, w.W);

  struct Lazy {
    std::once_flag once;
    RelationSet wide;
  };
  auto lazy = std::make_shared<Lazy>();
  auto pres = std::make_shared<Presentation>(p);
  std::int64_t wide = 2 * w.radius();
  sys.probe = [lazy, pres, wide, collect](const NormalWord& u) {
    std::call_once(lazy->once, [&] { lazy->wide = RelationSet(collect(*pres, wide).rels); });
    return lazy->wide.reducible(u);
  };
  return sys;
}

}  // namespace

IndexWindow window_from(const Presentation& p, IndexWindow fallback) {
  return {p.option("window", fallback.W), p.option("relation-multiplier", fallback.M)};
}

std::vector<Instance> instantiate_schema(const Signature& sig, const RelationSchema& schema, std::int64_t lo,
                                         std::int64_t hi) {
  std::vector<Instance> out;
  if (lo > hi) return out;
  Bindings env;
  for (const auto& v : schema.vars) env[v] = lo;
  std::vector<std::int64_t> vals(schema.vars.size(), lo);
  while (true) {
    for (std::size_t k = 0; k < vals.size(); ++k) env[schema.vars[k]] = vals[k];
    if (!schema.condition || schema.condition->eval(env)) {
      Polynomial poly = normalize(*schema.body->instantiate(sig, env), sig);
      if (!poly.is_zero()) {
        std::string name = schema.name + "[";
        std::int64_t spread = 0;
        for (std::size_t k = 0; k < vals.size(); ++k) {
          name += (k ? "," : "") + std::to_string(vals[k]);
          spread = std::max(spread, vals[k] < 0 ? -vals[k] : vals[k]);
        }
        out.push_back({{name + "]", std::move(poly)}, spread});
      }
    }
    std::size_t k = vals.size();
    while (k > 0 && vals[k - 1] == hi) vals[--k] = lo;
    if (k == 0) break;
    ++vals[k - 1];
  }
  return out;
}

std::vector<Letter> window_letters(const Signature& sig, std::int64_t lo, std::int64_t hi) {
  std::vector<Letter> out;
  for (const auto& g : sig.names()) {
    if (!g.indexed) {
      out.push_back(sig.letter(g.name));
      continue;
    }
    for (std::int64_t i = lo; i <= hi; ++i) out.push_back(sig.letter(g.name, i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CheckParams WindowedSystem::params() const {
  CheckParams p;
  p.multipliers = letters;
  p.active = active;
  p.boundary_probe = probe;
  return p;
}

WindowedSystem instantiate_window(const Presentation& p, IndexWindow w) { return build(p, w, collect_schemas); }

WindowedSystem enveloping_window(const Presentation& p, IndexWindow w) { return build(p, w, collect_enveloping); }

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Ok:
      return "ok";
    case Outcome::Fail:
      return "fail";
    case Outcome::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

EmbeddingReport embedding_check(const WindowedSystem& sys, std::uint32_t max_dpow) {
  EmbeddingReport rep;
  for (Letter b : sys.letters)
    for (std::uint32_t t = 0; t <= max_dpow; ++t) {
      NormalWord u(b, t);
      ++rep.checked;
      if (sys.set.reducible(u))
        rep.reducible.push_back(u);
      else if (sys.probe && sys.probe(u))
        rep.undecided.push_back(u);
    }
  if (!rep.reducible.empty())
    rep.outcome = Outcome::Fail;
  else if (!rep.undecided.empty())
    rep.outcome = Outcome::Inconclusive;
  return rep;
}

IdealEqualityReport ideal_equality(const WindowedSystem& lhs, const WindowedSystem& rhs,
                                   const CompletionLimits& limits) {
  const Signature& sig = lhs.sig;
  IdealEqualityReport rep;

  bool lhs_undecided = false;
  for (std::size_t i : lhs.active) {
    Polynomial r = remainder(sig, rhs.set, lhs.set[i].poly);
    if (r.is_zero()) continue;
    rep.lhs_not_in_rhs.push_back(lhs.set[i].name);
    const auto& terms = r.terms();
    if (rhs.probe && std::any_of(terms.begin(), terms.end(), [&](const auto& t) { return rhs.probe(t.word); }))
      lhs_undecided = true;
  }

  // Shirshov steps seeded by the active part of lhs; every adjoined
  // polynomial is a reduced composition, hence a member of Id(lhs).
  RelationSet basis = lhs.set;
  std::vector<std::size_t> pool = lhs.active;
  std::set<std::pair<std::size_t, std::size_t>> done;
  CheckParams params;
  params.multipliers = lhs.letters;
  std::size_t added = 0;
  auto pending = [&] {
    for (std::size_t i : rhs.active)
      if (!remainder(sig, basis, rhs.set[i].poly).is_zero()) return true;
    return false;
  };
  bool stop = false;
  for (std::size_t round = 0; round < limits.max_iters && !stop && pending(); ++round) {
    std::vector<Polynomial> found;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t f : pool)
      for (std::size_t g : pool)
        if (done.insert({f, g}).second) pairs.push_back({f, g});
    if (pairs.empty()) break;
    std::vector<std::vector<Polynomial>> per(pairs.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(pairs.size()); ++k) {
      auto recs = compositions(sig, basis, pairs[k].first, pairs[k].second, params);
      for (auto& r : recs) {
        Polynomial rem = remainder(sig, basis, r.poly);
        if (!rem.is_zero() && rem.leading_word().length() <= limits.max_length) per[k].push_back(std::move(rem));
      }
    }
    for (auto& v : per)
      for (auto& p : v) found.push_back(std::move(p));
    std::stable_sort(found.begin(), found.end(), [](const Polynomial& x, const Polynomial& y) {
      return x.leading_word() < y.leading_word();
    });
    for (auto& c : found) {
      Polynomial r = remainder(sig, basis, c);
      if (r.is_zero()) continue;
      if (added >= limits.max_basis) {
        rep.diagnostic = "basis size limit " + std::to_string(limits.max_basis) + " reached";
        stop = true;
        break;
      }
      pool.push_back(basis.size());
      basis.add({"c" + std::to_string(++added), make_monic(r)});
    }
  }
  rep.completed_size = basis.size();
  for (std::size_t i : rhs.active)
    if (!remainder(sig, basis, rhs.set[i].poly).is_zero()) rep.rhs_not_in_lhs.push_back(rhs.set[i].name);

  if (!rep.lhs_not_in_rhs.empty() && !lhs_undecided)
    rep.outcome = Outcome::Fail;
  else if (!rep.lhs_not_in_rhs.empty() || !rep.rhs_not_in_lhs.empty())
    rep.outcome = Outcome::Inconclusive;
  return rep;
}

}  // namespace cgsb
