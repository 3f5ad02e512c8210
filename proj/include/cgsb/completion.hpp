#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cgsb/gsb.hpp"

namespace cgsb {

enum class CompositionType { Inclusion, RightInclusion, Intersection, RightIntersection, LeftMult, RightMult };

const char* to_string(CompositionType t);

enum class Verdict { Trivial, Nontrivial, Inconclusive };

const char* to_string(Verdict v);

struct CompositionRecord {
  CompositionType type = CompositionType::Inclusion;
  std::size_t f = 0;
  std::size_t g = 0;
  /// Ambiguity word; absent for the multiplication types.
  std::optional<NormalWord> w;
  /// Multiplier generator and product index for the multiplication types.
  std::optional<Letter> b;
  std::uint64_t n = 0;
  /// How g (or, for intersections, f) is placed: prefix a(n), suffix (m) c, D-power i.
  Pattern via;
  Polynomial poly;
  ReductionTrace trace;
  Verdict verdict = Verdict::Trivial;
};

struct CheckParams {
  /// Generators used as multipliers in b(n)f and f(n)b; empty means every
  /// generator of a signature without indexed families.
  std::vector<Letter> multipliers;
  /// Extra upper bounds (exclusive) on n for the multiplication compositions;
  /// the locality-derived bound is used when larger.
  std::uint64_t left_mult_bound = 0;
  std::uint64_t right_mult_bound = 0;
  /// Indices of relations whose compositions are examined; empty means all.
  std::vector<std::size_t> active;
  /// Reports whether a word would be reducible by relations outside the
  /// instantiated window; a nonzero remainder hitting it is inconclusive.
  std::function<bool(const NormalWord&)> boundary_probe;
  MatchStrategy strategy = MatchStrategy::Leftmost;
  bool record_steps = false;
  bool parallel = false;
};

/// Compositions of f with g (overlaps), plus the multiplication compositions
/// of f when f == g. Polynomials are filled in, not reduced.
std::vector<CompositionRecord> compositions(const Signature& sig, const RelationSet& S, std::size_t f, std::size_t g,
                                            const CheckParams& params = {});

/// Every composition among the active relations, in a fixed order.
std::vector<CompositionRecord> all_compositions(const Signature& sig, const RelationSet& S, const CheckParams& params = {});

/// Reduces c.poly and sets trace and verdict.
void classify(const Signature& sig, const RelationSet& S, CompositionRecord& c, const CheckParams& params = {});

bool is_trivial(const Signature& sig, const RelationSet& S, const Polynomial& h);

struct GsbReport {
  std::vector<CompositionRecord> records;
  std::size_t counts[6] = {0, 0, 0, 0, 0, 0};
  std::size_t nontrivial = 0;
  std::size_t inconclusive = 0;
  Verdict verdict() const {
    if (nontrivial) return Verdict::Nontrivial;
    if (inconclusive) return Verdict::Inconclusive;
    return Verdict::Trivial;
  }
  bool is_gsb() const { return nontrivial == 0 && inconclusive == 0; }
};

/// Runs compositions and triviality over all pairs. The serial and parallel
/// paths produce identical reports.
GsbReport check_gsb(const Signature& sig, const RelationSet& S, const CheckParams& params = {});
GsbReport check_gsb_serial(const Signature& sig, const RelationSet& S, const CheckParams& params = {});
GsbReport check_gsb_parallel(const Signature& sig, const RelationSet& S, const CheckParams& params = {});

struct CompletionLimits {
  std::size_t max_basis = 200;
  std::size_t max_length = 8;
  std::size_t max_iters = 100;
};

struct CompletionResult {
  RelationSet basis;
  bool complete = false;
  std::string diagnostic;
  std::size_t rounds = 0;
  std::size_t compositions_checked = 0;
};

/// Shirshov completion. On a tripped limit returns the partial basis with
/// complete == false and a diagnostic naming the limit.
CompletionResult complete(const Signature& sig, const RelationSet& S, const CompletionLimits& limits = {},
                          const CheckParams& params = {});

/// Reduces every member against the others until stable; zero members are dropped.
RelationSet interreduce(const Signature& sig, const RelationSet& S);

RelationSet minimalize(const RelationSet& S);
/// Minimalize, then replace each tail by its normal form; sorted by leading word.
RelationSet reduce_basis(const Signature& sig, const RelationSet& S);

struct IrrBounds {
  std::size_t max_length = 3;
  std::uint32_t max_dpow = 1;
  /// Letters to build words from; empty means every generator of a plain signature.
  std::vector<Letter> letters;
};

/// S-irreducible normal words within bounds, ascending.
std::vector<NormalWord> irr_enumerate(const Signature& sig, const RelationSet& S, const IrrBounds& bounds);
/// D-free members of irr_enumerate; throws std::invalid_argument unless every leading word is D-free.
std::vector<NormalWord> kd_basis(const Signature& sig, const RelationSet& S, IrrBounds bounds);

/// All generators of a signature without indexed families.
std::vector<Letter> plain_letters(const Signature& sig);

}  // namespace cgsb
