#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace equicolor {

/// Dense vertex id in 0..n-1.
using Vertex = int;

/// Undirected edge, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph.
///
/// Vertices are the dense ids 0..order()-1. Construction rejects self-loops,
/// parallel edges and out-of-range endpoints with std::invalid_argument.
/// Every "mutating" operation returns a new graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_[static_cast<std::size_t>(v)]};
  }
  int degree(Vertex v) const {
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
  }
  bool adjacent(Vertex a, Vertex b) const;

  int max_degree() const;
  /// Minimum degree over all vertices (0 when an isolated vertex exists).
  int min_degree() const;
  /// Minimum degree over non-isolated vertices; 0 for edgeless graphs.
  int min_positive_degree() const;

  Graph without_edge(Vertex a, Vertex b) const;
  Graph with_edge(Vertex a, Vertex b) const;
  /// Induced subgraph on `keep`; vertex keep[i] becomes vertex i.
  Graph induced(std::span<const Vertex> keep) const;
  /// Vertices of `other` are shifted by order().
  Graph disjoint_union(const Graph& other) const;
  /// perm[old] = new; perm must be a permutation of 0..n-1.
  Graph relabeled(std::span<const Vertex> perm) const;

  /// Order-independent hash of the labeled edge set, rendered as 16 hex digits.
  std::string hash_hex() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void build(std::vector<Edge> edges);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

namespace graphs {
Graph empty(int n);
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int leaves);
Graph complete_bipartite(int a, int b);
Graph petersen();
/// The 3-cube Q3: 8 vertices, 12 edges, triangle-free, planar.
Graph cube();
}  // namespace graphs

}  // namespace equicolor
