#include "equicolor/graph_algorithms.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace equicolor {

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(root)] = 0;
    parent[static_cast<std::size_t>(root)] = -1;
    queue.assign(1, root);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      int du = dist[static_cast<std::size_t>(u)];
      // every cycle closed from here has length at least 2*du
      if (2 * du >= best) break;
      for (Vertex w : g.neighbors(u)) {
        auto& dw = dist[static_cast<std::size_t>(w)];
        if (dw < 0) {
          dw = du + 1;
          parent[static_cast<std::size_t>(w)] = u;
          queue.push_back(w);
        } else if (parent[static_cast<std::size_t>(u)] != w) {
          best = std::min(best, du + dw + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

namespace {

// Depth-first extension of a simple path; used by both the cycle and path
// searches. `path` holds the current path, `on_path` marks its vertices.
struct PathSearch {
  const Graph& g;
  std::vector<char> on_path;
  std::vector<Vertex> path;
  Vertex min_vertex = 0;  // vertices below this are excluded (cycle search)

  explicit PathSearch(const Graph& graph)
      : g(graph), on_path(static_cast<std::size_t>(graph.order()), 0) {}

  bool extend_to(Vertex target, int remaining) {
    Vertex tail = path.back();
    if (remaining == 0) return tail == target;
    for (Vertex w : g.neighbors(tail)) {
      if (w < min_vertex || on_path[static_cast<std::size_t>(w)]) continue;
      if (w == target && remaining != 1) continue;
      on_path[static_cast<std::size_t>(w)] = 1;
      path.push_back(w);
      if (extend_to(target, remaining - 1)) return true;
      path.pop_back();
      on_path[static_cast<std::size_t>(w)] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Vertex>> find_cycle_of_length(const Graph& g, int k) {
  if (k < 3) throw std::invalid_argument("cycle length must be at least 3");
  if (k > g.order()) return std::nullopt;
  PathSearch search(g);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (g.degree(s) < 2) continue;
    search.min_vertex = s;
    // Cycle s -> first -> ... -> last -> s with s the smallest vertex.
    for (Vertex first : g.neighbors(s)) {
      if (first < s) continue;
      search.path.assign({s, first});
      search.on_path[static_cast<std::size_t>(s)] = 1;
      search.on_path[static_cast<std::size_t>(first)] = 1;
      // need k-2 more edges to reach a neighbor of s, then close with one more
      bool found = false;
      for (Vertex last : g.neighbors(s)) {
        if (last <= first) continue;
        if (search.extend_to(last, k - 2)) {
          found = true;
          break;
        }
      }
      if (found) {
        std::vector<Vertex> cycle = search.path;
        return cycle;
      }
      std::fill(search.on_path.begin(), search.on_path.end(), 0);
    }
  }
  return std::nullopt;
}

bool has_cycle_of_length(const Graph& g, int k) { return find_cycle_of_length(g, k).has_value(); }

std::optional<std::vector<Vertex>> find_path_of_length(const Graph& g, Vertex from, Vertex to,
                                                       int edges) {
  if (edges < 0) return std::nullopt;
  if (from == to) {
    if (edges == 0) return std::vector<Vertex>{from};
    return std::nullopt;
  }
  PathSearch search(g);
  search.path.assign(1, from);
  search.on_path[static_cast<std::size_t>(from)] = 1;
  if (search.extend_to(to, edges)) return search.path;
  return std::nullopt;
}

bool is_planar(const Graph& g) {
  const int n = g.order();
  if (n <= 4) return true;
  if (static_cast<long long>(g.size()) > 3LL * n - 6) return false;
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) boost::add_edge(static_cast<std::size_t>(e.u),
                                                  static_cast<std::size_t>(e.v), bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

long long edges_between(const Graph& g, std::span<const Vertex> U, std::span<const Vertex> W) {
  std::vector<char> side(static_cast<std::size_t>(g.order()), 0);
  for (Vertex u : U) {
    if (u < 0 || u >= g.order()) throw std::invalid_argument("vertex out of range");
    side[static_cast<std::size_t>(u)] = 1;
  }
  for (Vertex w : W) {
    if (w < 0 || w >= g.order()) throw std::invalid_argument("vertex out of range");
    if (side[static_cast<std::size_t>(w)] == 1)
      throw std::invalid_argument("edges_between: U and W overlap at vertex " + std::to_string(w));
    side[static_cast<std::size_t>(w)] = 2;
  }
  long long count = 0;
  for (const Edge& e : g.edges()) {
    char a = side[static_cast<std::size_t>(e.u)];
    char b = side[static_cast<std::size_t>(e.v)];
    if ((a == 1 && b == 2) || (a == 2 && b == 1)) ++count;
  }
  return count;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> comp{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbors(comp[i]))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

std::vector<Vertex> degeneracy_order(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!removed[static_cast<std::size_t>(v)] &&
          (pick < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(pick)]))
        pick = v;
    removed[static_cast<std::size_t>(pick)] = 1;
    order.push_back(pick);
    for (Vertex w : g.neighbors(pick))
      if (!removed[static_cast<std::size_t>(w)]) --deg[static_cast<std::size_t>(w)];
  }
  return order;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[static_cast<std::size_t>(s)] >= 0) continue;
    side[static_cast<std::size_t>(s)] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        auto& sw = side[static_cast<std::size_t>(w)];
        if (sw < 0) {
          sw = 1 - side[static_cast<std::size_t>(u)];
          stack.push_back(w);
        } else if (sw == side[static_cast<std::size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

}  // namespace equicolor
