#pragma once

#include <optional>
#include <span>
#include <vector>

#include "equicolor/graph.hpp"

namespace equicolor {

/// Length of a shortest cycle; std::nullopt stands for infinity (forests).
std::optional<int> girth(const Graph& g);

/// True iff g has a cycle on exactly k vertices. Throws for k < 3.
bool has_cycle_of_length(const Graph& g, int k);

/// A cycle on exactly k vertices, listed in traversal order, if one exists.
std::optional<std::vector<Vertex>> find_cycle_of_length(const Graph& g, int k);

/// A simple path from `from` to `to` with exactly `edges` edges, if one exists.
std::optional<std::vector<Vertex>> find_path_of_length(const Graph& g, Vertex from, Vertex to,
                                                       int edges);

/// Planarity via the Boyer-Myrvold test.
bool is_planar(const Graph& g);

/// Number of edges with one end in U and the other in W. U and W must be
/// disjoint (std::invalid_argument otherwise).
long long edges_between(const Graph& g, std::span<const Vertex> U, std::span<const Vertex> W);

bool is_connected(const Graph& g);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);

/// Smallest-last (degeneracy) order; position i holds the i-th vertex removed.
std::vector<Vertex> degeneracy_order(const Graph& g);

/// Two-coloring side per vertex if g is bipartite.
std::optional<std::vector<int>> bipartition(const Graph& g);

}  // namespace equicolor
