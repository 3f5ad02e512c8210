#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cgsb/normal_form.hpp"
#include "cgsb/polynomial.hpp"
#include "cgsb/signature.hpp"

namespace cgsb {

struct Relation {
  std::string name;
  Polynomial poly;
};

/// An occurrence of a relation's leading word inside a normal word.
///
/// Kind1 is a(n) s (m) c with a and s-bar D-free and c nonempty; Kind2 is
/// a(n) D^i s with a D-free. An empty `a` means no prefix (n is then unused).
struct Pattern {
  enum class Kind { Kind1, Kind2 };
  Kind kind = Kind::Kind2;
  std::size_t relation = 0;
  NormalWord a;
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  NormalWord c;
  std::uint32_t i = 0;

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

enum class MatchStrategy { Leftmost, Rightmost };

/// Monic relations with an index on their leading words.
class RelationSet {
 public:
  RelationSet() = default;
  /// Throws std::invalid_argument on a zero or non-monic relation.
  explicit RelationSet(std::vector<Relation> relations);
  /// Scales every nonzero relation to be monic and drops zeros.
  static RelationSet monic(std::vector<Relation> relations);

  std::size_t size() const { return rels_.size(); }
  bool empty() const { return rels_.empty(); }
  const Relation& operator[](std::size_t i) const { return rels_[i]; }
  const std::vector<Relation>& relations() const { return rels_; }
  const NormalWord& lead(std::size_t i) const { return rels_[i].poly.leading_word(); }

  void add(Relation r);

  /// Every pattern whose leading word is u.
  std::vector<Pattern> find_reductions(const NormalWord& u) const;
  std::optional<Pattern> first_reduction(const NormalWord& u, MatchStrategy strategy = MatchStrategy::Leftmost) const;
  bool reducible(const NormalWord& u) const { return first_reduction(u).has_value(); }

  /// Relations whose leading word starts at letter l (used by overlap search).
  const std::vector<std::size_t>& starting_with(Letter l) const;

 private:
  void index(std::size_t i);
  // Tries relation r at position p of u; appends a pattern on success.
  bool match_at(const NormalWord& u, std::size_t p, std::size_t r, std::vector<Pattern>* out) const;
  void candidates(const NormalWord& u, std::size_t p, std::vector<std::size_t>& out) const;

  std::vector<Relation> rels_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_head_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> single_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_pair_;
};

/// The leading word the pattern is declared to produce.
NormalWord pattern_word(const RelationSet& S, const Pattern& p);
/// The normalized substitution [a(n) s (m) c] or [a(n) D^i s].
/// Throws std::invalid_argument on malformed patterns.
Polynomial eval_pattern(const Signature& sig, const RelationSet& S, const Pattern& p);

struct ReductionStep {
  NormalWord word;
  Pattern pattern;
  Rational coeff;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  Polynomial remainder;
  std::size_t step_count = 0;
};

struct ReduceOptions {
  MatchStrategy strategy = MatchStrategy::Leftmost;
  bool record_steps = false;
};

/// Division algorithm: p = sum coeff * eval_pattern(pattern) + remainder with
/// remainder supported on S-irreducible words.
ReductionTrace reduce(const Signature& sig, const RelationSet& S, const Polynomial& p, ReduceOptions opts = {});
Polynomial remainder(const Signature& sig, const RelationSet& S, const Polynomial& p,
                     MatchStrategy strategy = MatchStrategy::Leftmost);

std::string describe(const Signature& sig, const RelationSet& S, const Pattern& p);

}  // namespace cgsb
