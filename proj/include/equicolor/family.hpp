#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "equicolor/graph.hpp"

namespace equicolor {

/// Constraint set describing a graph family, e.g. "planar without C4".
struct FamilySpec {
  bool require_planar = false;
  std::set<int> forbidden_cycle_lengths;
  std::optional<int> min_girth;
  std::optional<int> max_degree_cap;

  /// Closes the constraint set: min_girth g adds {3..g-1} to the forbidden
  /// lengths, and min_girth is raised to the largest g whose prefix {3..g-1}
  /// is forbidden. Idempotent.
  FamilySpec normalized() const;

  /// Girth lower bound implied by the normalized constraints (3 if none).
  int effective_girth() const;

  bool forbids(int cycle_length) const;

  /// Textual form accepted by parse(), e.g. "planar,forbid=3,maxdeg=7".
  std::string to_string() const;

  /// Accepts presets (`any`, `planar`, `triangle-free`, `c4-free`,
  /// `girth6`, `girth>=G`) and comma-separated clauses `planar`,
  /// `forbid=3:4`, `girth=G`, `maxdeg=D`. Throws std::invalid_argument.
  static FamilySpec parse(std::string_view text);

  static FamilySpec any() { return {}; }
  /// Planar graphs without C3.
  static FamilySpec triangle_free_planar();
  /// Planar graphs without C4.
  static FamilySpec c4_free_planar();
  /// Planar graphs of girth at least g.
  static FamilySpec planar_girth(int g);

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Outcome of a family membership check. On failure, `constraint` names the
/// first violated constraint and `witness` carries evidence (a forbidden
/// cycle in traversal order, or the offending vertex for degree caps).
struct FamilyCheck {
  bool ok = true;
  std::string constraint;
  std::vector<Vertex> witness;

  explicit operator bool() const { return ok; }
};

/// Checks constraints in the order: max degree, forbidden cycles (ascending
/// length), planarity.
FamilyCheck matches_family(const Graph& g, const FamilySpec& family);

}  // namespace equicolor
