#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "equicolor/graph.hpp"

namespace equicolor {

/// Largest order supported by canonical labeling (the key packs the upper
/// triangle of the adjacency matrix into 128 bits).
inline constexpr int kMaxCanonicalOrder = 16;

/// Isomorphism-invariant key: two graphs of equal order get equal keys iff
/// they are isomorphic.
struct CanonicalKey {
  int n = 0;
  std::array<std::uint64_t, 2> bits{};

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept {
    return static_cast<std::size_t>(k.bits[0] * 0x9E3779B97F4A7C15ULL ^ k.bits[1] ^
                                    static_cast<std::uint64_t>(k.n) << 56);
  }
};

struct CanonicalForm {
  CanonicalKey key;
  /// labeling[v] = canonical position of vertex v.
  std::vector<Vertex> labeling;
};

/// Canonical labeling by individualization-refinement: equitable refinement
/// from the single-cell partition, branching on the first non-singleton cell
/// (skipping vertices that are twins of an already tried one), keeping the
/// lexicographically largest packed adjacency matrix among the leaves.
/// Throws std::invalid_argument for orders above kMaxCanonicalOrder.
CanonicalForm canonical_form(const Graph& g);

inline CanonicalKey canonical_key(const Graph& g) { return canonical_form(g).key; }

/// g relabeled by its canonical labeling.
Graph canonical_graph(const Graph& g);

/// Key of an already labeled graph (no search); used by tests and oracles.
CanonicalKey packed_key(const Graph& g);

}  // namespace equicolor
