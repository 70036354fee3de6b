#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "equicolor/graph.hpp"

namespace equicolor {

/// Class index meaning "not in any class".
inline constexpr int kUncolored = -1;

/// Ordered list of disjoint vertex classes over the universe 0..n-1.
///
/// At most one vertex may be left uncolored; every other vertex belongs to
/// exactly one class. Class order is significant. Classes are stored sorted.
/// Class indices are 0-based in the API and 1-based in every textual form.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless the classes plus the optional
  /// uncolored vertex partition 0..universe-1.
  Partition(int universe, std::vector<std::vector<Vertex>> classes,
            std::optional<Vertex> uncolored = std::nullopt);

  /// color_of[v] in [0, k) or kUncolored (for at most one vertex).
  static Partition from_assignment(std::span<const int> color_of, int k);

  int universe() const { return static_cast<int>(owner_.size()); }
  int class_count() const { return static_cast<int>(classes_.size()); }
  const std::vector<Vertex>& members(int index) const { return classes_.at(index); }
  const std::vector<std::vector<Vertex>>& classes() const { return classes_; }
  int class_of(Vertex v) const { return owner_.at(v); }
  std::optional<Vertex> uncolored() const { return uncolored_; }
  std::vector<int> sizes() const;
  /// Per-vertex class index (kUncolored for the uncolored vertex).
  const std::vector<int>& assignment() const { return owner_; }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.classes_ == b.classes_ && a.uncolored_ == b.uncolored_ &&
           a.owner_.size() == b.owner_.size();
  }

 private:
  std::vector<std::vector<Vertex>> classes_;
  std::vector<int> owner_;
  std::optional<Vertex> uncolored_;
};

/// True iff no edge has both ends in one class. Throws std::invalid_argument
/// if p does not cover every vertex of g.
bool is_proper(const Graph& g, const Partition& p);

/// True iff class sizes pairwise differ by at most one.
bool is_equitable(const Partition& p);

/// Why a candidate coloring was rejected. Class indices are 1-based.
struct Violation {
  enum class Kind { universe_mismatch, uncolored_vertex, class_count, improper_edge, unbalanced };
  Kind kind;
  std::optional<Edge> edge;
  int class_a = 0;
  int class_b = 0;
  int size_a = 0;
  int size_b = 0;
  int expected = 0;
  int actual = 0;

  std::string describe() const;
};

std::string to_string(Violation::Kind kind);

struct VerifyResult {
  std::optional<Violation> violation;

  bool ok() const { return !violation.has_value(); }
  explicit operator bool() const { return ok(); }
};

/// ok iff p has exactly k classes, is proper on g and is equitable.
/// Violations are reported as values, never thrown.
VerifyResult verify_equitable_k_coloring(const Graph& g, const Partition& p, int k);

/// One step of a class rotation: move `v` from class `from` to class `to`.
/// Either index may be kUncolored.
struct Move {
  Vertex v;
  int from;
  int to;
};

/// Applies the moves in order. Throws std::invalid_argument when a vertex is
/// not in its stated from-class at the time it is moved.
Partition apply_chain(const Partition& p, std::span<const Move> chain);

/// `1: 1 3 5` style text, one line per class, 1-indexed vertices.
void write_coloring(std::ostream& out, const Partition& p);
std::string to_coloring_string(const Partition& p);
/// Parses the text format; the universe is the given vertex count.
Partition read_coloring(std::istream& in, int universe);

}  // namespace equicolor
