#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "equicolor/family.hpp"
#include "equicolor/graph.hpp"

namespace equicolor {

/// Hard cap on exhaustive orders; relaxed to kMaxCanonicalOrder when an edge
/// cap keeps the search small.
inline constexpr int kMaxExhaustiveOrder = 11;

struct GenConfig {
  enum class Mode { exhaustive, random };

  int n = 0;
  FamilySpec family;
  Mode mode = Mode::exhaustive;
  int count = 1;            // random mode: number of graphs
  std::uint64_t seed = 0;   // random mode
  bool connected = false;
  /// Exhaustive: keep only graphs with at most this many edges.
  /// Random: stop inserting once this many edges are present.
  std::optional<int> max_edges;
};

/// One representative per isomorphism class of n-vertex family members, in
/// canonical labeling, sorted by canonical key. Vertices are added one at a
/// time; every hereditary constraint (planarity, forbidden cycles, degree cap,
/// edge cap) is enforced on each intermediate level, connectivity only on
/// the final one. Throws std::invalid_argument when the order exceeds the
/// cap or the config is not exhaustive.
std::vector<Graph> enumerate_family(const GenConfig& config);

/// Calls `visit` for every graph of enumerate_family(config) in the same order.
void for_each_family_graph(const GenConfig& config, const std::function<void(const Graph&)>& visit);

/// The i-th random family member for (config.seed, index): vertex pairs are
/// shuffled with a seeded 64-bit Mersenne twister and inserted unless they
/// break a family constraint, until saturation or config.max_edges. With
/// config.connected, draws are repeated (deterministically) until a
/// connected graph appears. Not uniform over the family.
Graph random_family_graph(const GenConfig& config, int index = 0);

/// config.count graphs from random_family_graph.
std::vector<Graph> random_family(const GenConfig& config);

/// Per-draw seed derived from a base seed and an index (SplitMix64 step).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

enum class ExceptionKind { none, complete, odd_cycle, balanced_biclique_odd };

std::string to_string(ExceptionKind kind);

struct ExceptionCheck {
  bool exception = false;
  ExceptionKind kind = ExceptionKind::none;

  explicit operator bool() const { return exception; }
};

/// Is g one of the graphs excluded from the equitable Delta-coloring
/// conjecture: a complete graph, an odd cycle (m = 2) or K_{m,m} with m odd?
/// Requires m = max_degree(g) and g connected (std::invalid_argument).
ExceptionCheck is_exception(const Graph& g, int m);

}  // namespace equicolor
