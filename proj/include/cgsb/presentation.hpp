#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cgsb/expr_ast.hpp"
#include "cgsb/gsb.hpp"
#include "cgsb/lie.hpp"

namespace cgsb {

/// A relation family such as s0[i, j | i != 0] = L_i (0) L_j - L_0 (0) L_{i+j}.
struct RelationSchema {
  std::string name;
  std::vector<std::string> vars;
  std::optional<Condition> condition;
  AstPtr body;
};

/// One bracket rule x[n]y = value, e.g. L_i [0] L_j = -D L_{i+j}.
struct TableEntry {
  std::string left;
  std::optional<IndexExpr> left_index;
  std::uint32_t n = 0;
  std::string right;
  std::optional<IndexExpr> right_index;
  AstPtr value;
};

struct Presentation {
  Signature sig;
  std::vector<Relation> relations;  // normalized, possibly not monic
  std::vector<RelationSchema> schemas;
  std::vector<TableEntry> table;
  std::map<std::string, std::string> options;

  bool has_families() const;
  /// Integer option or `fallback`; throws std::invalid_argument on a non-integer value.
  std::int64_t option(const std::string& key, std::int64_t fallback) const;
};

/// Presentation files:
///
///   algebra {
///     N = 2
///     generators = a, b        # single generators
///     families = H, L          # indexed families X_i, i in Z
///     rank = a < b < H < L     # optional; default is declaration order
///     order = abs-then-signed  # or natural
///   }
///   table { L_i [0] L_j = -D L_{i+j} }
///   relations {
///     f = a (1) a - a (0) D a
///     s0[i, j | i != 0] = L_i (0) L_j - L_0 (0) L_{i+j}
///   }
///   options { window = 3; relation-multiplier = 3 }
///
/// Statements end at a newline or ';'. Throws ParseError or SignatureError.
Presentation parse_presentation(std::string_view text);
/// Canonical text; parse_presentation(print_presentation(p)) prints identically.
std::string print_presentation(const Presentation& p);

/// Bracket defined by the table entries; pairs given only in the opposite
/// orientation are filled in by skew-symmetry, unlisted pairs are zero.
LieTable lie_table(const Presentation& p);

}  // namespace cgsb
