#include "equicolor/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace equicolor {

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  n_ = n;
  adj_.assign(static_cast<std::size_t>(n), {});
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  build(std::vector<Edge>(edges.begin(), edges.end()));
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [a, b] : edges) list.emplace_back(a, b);
  build(std::move(list));
}

void Graph::build(std::vector<Edge> edges) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n_)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) + "-" +
                                  std::to_string(e.v));
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end())
    throw std::invalid_argument("parallel edge " + std::to_string(dup->u) + "-" +
                                std::to_string(dup->v));
  edges_ = std::move(edges);
  for (const Edge& e : edges_) {
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const auto& row = adj_[static_cast<std::size_t>(a)];
  return std::binary_search(row.begin(), row.end(), b);
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& row : adj_) best = std::max(best, static_cast<int>(row.size()));
  return best;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int best = n_;
  for (const auto& row : adj_) best = std::min(best, static_cast<int>(row.size()));
  return best;
}

int Graph::min_positive_degree() const {
  int best = 0;
  for (const auto& row : adj_) {
    int d = static_cast<int>(row.size());
    if (d > 0 && (best == 0 || d < best)) best = d;
  }
  return best;
}

Graph Graph::without_edge(Vertex a, Vertex b) const {
  Edge target(a, b);
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  bool found = false;
  for (const Edge& e : edges_) {
    if (e == target) {
      found = true;
      continue;
    }
    kept.push_back(e);
  }
  if (!found) throw std::invalid_argument("edge not present");
  return Graph(n_, kept);
}

Graph Graph::with_edge(Vertex a, Vertex b) const {
  std::vector<Edge> list = edges_;
  list.emplace_back(a, b);
  return Graph(n_, list);
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<int> index(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    Vertex v = keep[i];
    if (v < 0 || v >= n_ || index[static_cast<std::size_t>(v)] != -1)
      throw std::invalid_argument("induced: vertex list must be distinct in-range ids");
    index[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<Edge> list;
  for (const Edge& e : edges_) {
    int a = index[static_cast<std::size_t>(e.u)];
    int b = index[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) list.emplace_back(a, b);
  }
  return Graph(static_cast<int>(keep.size()), list);
}

Graph Graph::disjoint_union(const Graph& other) const {
  std::vector<Edge> list = edges_;
  for (const Edge& e : other.edges_) list.emplace_back(e.u + n_, e.v + n_);
  return Graph(n_ + other.n_, list);
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw std::invalid_argument("relabeled: permutation size mismatch");
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  for (Vertex p : perm) {
    if (p < 0 || p >= n_ || seen[static_cast<std::size_t>(p)])
      throw std::invalid_argument("relabeled: not a permutation");
    seen[static_cast<std::size_t>(p)] = 1;
  }
  std::vector<Edge> list;
  list.reserve(edges_.size());
  for (const Edge& e : edges_)
    list.emplace_back(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  return Graph(n_, list);
}

std::string Graph::hash_hex() const {
  // FNV-1a over (n, sorted edges); edges_ is kept sorted so this is canonical
  // for the labeled graph.
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t value) {
    for (int i = 0; i < 8; ++i) {
      h ^= (value >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(n_));
  for (const Edge& e : edges_) {
    mix(static_cast<std::uint64_t>(e.u));
    mix(static_cast<std::uint64_t>(e.v));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace graphs {

Graph empty(int n) { return Graph(n); }

Graph complete(int n) {
  std::vector<Edge> list;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) list.emplace_back(a, b);
  return Graph(n, list);
}

Graph path(int n) {
  std::vector<Edge> list;
  for (int a = 0; a + 1 < n; ++a) list.emplace_back(a, a + 1);
  return Graph(n, list);
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> list;
  for (int a = 0; a < n; ++a) list.emplace_back(a, (a + 1) % n);
  return Graph(n, list);
}

Graph star(int leaves) {
  std::vector<Edge> list;
  for (int a = 1; a <= leaves; ++a) list.emplace_back(0, a);
  return Graph(leaves + 1, list);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> list;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) list.emplace_back(i, a + j);
  return Graph(a + b, list);
}

Graph petersen() {
  std::vector<Edge> list;
  for (int i = 0; i < 5; ++i) {
    list.emplace_back(i, (i + 1) % 5);
    list.emplace_back(i, i + 5);
    list.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, list);
}

Graph cube() {
  std::vector<Edge> list;
  for (int v = 0; v < 8; ++v)
    for (int bit = 1; bit < 8; bit <<= 1)
      if ((v & bit) == 0) list.emplace_back(v, v | bit);
  return Graph(8, list);
}

}  // namespace graphs

}  // namespace equicolor
