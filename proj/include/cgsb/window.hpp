#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cgsb/completion.hpp"
#include "cgsb/presentation.hpp"

namespace cgsb {

/// Finite slice of a presentation with indexed families. Compositions are
/// formed among relations whose free indices lie in [-W, W]; relations used
/// for reduction are instantiated over [-M W, M W].
struct IndexWindow {
  std::int64_t W = 2;
  std::int64_t M = 4;
  std::int64_t radius() const { return W * M; }
};

/// Window from the presentation's options (window, relation-multiplier) with fallbacks.
IndexWindow window_from(const Presentation& p, IndexWindow fallback = {});

struct Instance {
  Relation relation;
  /// Largest |value| among the bound index variables (0 for plain relations).
  std::int64_t spread = 0;
};

/// All instances with every variable in [lo, hi] satisfying the condition.
std::vector<Instance> instantiate_schema(const Signature& sig, const RelationSchema& schema, std::int64_t lo,
                                         std::int64_t hi);

/// Every plain and indexed generator with index in [lo, hi], ascending.
std::vector<Letter> window_letters(const Signature& sig, std::int64_t lo, std::int64_t hi);

struct WindowedSystem {
  Signature sig;
  IndexWindow window;
  RelationSet set;
  /// Relations whose instance lies inside [-W, W].
  std::vector<std::size_t> active;
  /// Generators with index in [-W, W]; used as multipliers.
  std::vector<Letter> letters;
  /// True when a word is reducible by relations instantiated over twice the
  /// relation window. Built on first use; safe to call from several threads.
  std::function<bool(const NormalWord&)> probe;

  CheckParams params() const;
};

/// The presentation's relations and schemas over the window.
WindowedSystem instantiate_window(const Presentation& p, IndexWindow w);
/// The enveloping relations x(n)y - {y(n)x} - x[n]y of the presentation's table.
WindowedSystem enveloping_window(const Presentation& p, IndexWindow w);

enum class Outcome { Ok, Fail, Inconclusive };
const char* to_string(Outcome o);

struct EmbeddingReport {
  Outcome outcome = Outcome::Ok;
  std::size_t checked = 0;
  std::vector<NormalWord> reducible;
  std::vector<NormalWord> undecided;
};

/// D^t b is irreducible for every window generator b and t <= max_dpow.
EmbeddingReport embedding_check(const WindowedSystem& sys, std::uint32_t max_dpow);

struct IdealEqualityReport {
  Outcome outcome = Outcome::Ok;
  /// Active members of `lhs` whose remainder against `rhs` is nonzero.
  std::vector<std::string> lhs_not_in_rhs;
  /// Active members of `rhs` left nonzero by the completed `lhs`.
  std::vector<std::string> rhs_not_in_lhs;
  std::size_t completed_size = 0;
  std::string diagnostic;
};

/// Windowed Id(lhs) == Id(rhs), where rhs is expected to be a Gröbner–Shirshov
/// basis: lhs ⊆ Id(rhs) by division against rhs, and rhs ⊆ Id(lhs) by division
/// against a length-capped completion of lhs. Remainders are only zero for
/// genuine ideal members, so an Ok outcome is a sound witness.
IdealEqualityReport ideal_equality(const WindowedSystem& lhs, const WindowedSystem& rhs,
                                   const CompletionLimits& limits);

/// Built-in presentations: "virasoro", "heisenberg-virasoro", "heisenberg-virasoro-amended", "ex00", "ex00-basis", "bfk04".
std::vector<std::string> builtin_names();
/// Throws std::invalid_argument for unknown names.
Presentation builtin(const std::string& name);
std::string builtin_text(const std::string& name);

/// The closed-form Irr family of a built-in loop algebra (as printed for virasoro and
/// heisenberg-virasoro; the amended variant uses the family its relations actually produce), restricted
/// to words of length <= max_length, D-power <= max_dpow and indices in [-W, W]; ascending.
std::vector<NormalWord> expected_irr(const std::string& name, const Signature& sig, std::int64_t W,
                                     std::size_t max_length, std::uint32_t max_dpow);

}  // namespace cgsb
