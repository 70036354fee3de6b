#include "equicolor/generate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "equicolor/canonical.hpp"
#include "equicolor/graph_algorithms.hpp"

namespace equicolor {

namespace {

// Would adding vertex `fresh` adjacent to `nbrs` keep `g + fresh` in the
// family? `g` already belongs to it. Constraint order follows cost.
bool extension_allowed(const Graph& g, const std::vector<Vertex>& nbrs, const FamilySpec& f,
                       const std::optional<int>& max_edges) {
  if (max_edges && static_cast<int>(g.size() + nbrs.size()) > *max_edges) return false;
  if (f.max_degree_cap) {
    if (static_cast<int>(nbrs.size()) > *f.max_degree_cap) return false;
    for (Vertex v : nbrs)
      if (g.degree(v) + 1 > *f.max_degree_cap) return false;
  }
  // A new cycle of length L through the fresh vertex is a path with L-2
  // edges between two of its neighbors.
  for (int len : f.forbidden_cycle_lengths) {
    for (std::size_t a = 0; a < nbrs.size(); ++a)
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
        if (len == 3) {
          if (g.adjacent(nbrs[a], nbrs[b])) return false;
        } else if (find_path_of_length(g, nbrs[a], nbrs[b], len - 2)) {
          return false;
        }
      }
  }
  return true;
}

Graph extend(const Graph& g, const std::vector<Vertex>& nbrs) {
  std::vector<Edge> edges = g.edges();
  for (Vertex v : nbrs) edges.emplace_back(v, g.order());
  return Graph(g.order() + 1, edges);
}

void check_config(const GenConfig& c) {
  if (c.mode != GenConfig::Mode::exhaustive)
    throw std::invalid_argument("enumerate_family: config is not exhaustive");
  if (c.n < 0) throw std::invalid_argument("enumerate_family: negative order");
  const int cap = c.max_edges ? kMaxCanonicalOrder : kMaxExhaustiveOrder;
  if (c.n > cap)
    throw std::invalid_argument("enumerate_family: order " + std::to_string(c.n) +
                                " exceeds the exhaustive cap " + std::to_string(cap));
}

}  // namespace

std::vector<Graph> enumerate_family(const GenConfig& config) {
  check_config(config);
  const FamilySpec f = config.family.normalized();
  if (config.n == 0) return config.connected ? std::vector<Graph>{} : std::vector<Graph>{Graph(0)};

  std::vector<Graph> level{Graph(1)};
  for (int k = 1; k < config.n; ++k) {
    std::unordered_set<CanonicalKey, CanonicalKeyHash> seen;
    std::vector<std::pair<CanonicalKey, Graph>> next;
    for (const Graph& g : level) {
      const std::uint32_t subsets = std::uint32_t{1} << k;
      std::vector<Vertex> nbrs;
      for (std::uint32_t s = 0; s < subsets; ++s) {
        nbrs.clear();
        for (Vertex v = 0; v < k; ++v)
          if (s >> v & 1U) nbrs.push_back(v);
        if (!extension_allowed(g, nbrs, f, config.max_edges)) continue;
        Graph h = extend(g, nbrs);
        if (f.require_planar && !is_planar(h)) continue;
        CanonicalForm form = canonical_form(h);
        if (!seen.insert(form.key).second) continue;
        next.emplace_back(form.key, h.relabeled(form.labeling));
      }
    }
    std::sort(next.begin(), next.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& [key, g] : next) level.push_back(std::move(g));
  }
  if (config.connected)
    std::erase_if(level, [](const Graph& g) { return !is_connected(g); });
  return level;
}

void for_each_family_graph(const GenConfig& config,
                           const std::function<void(const Graph&)>& visit) {
  for (const Graph& g : enumerate_family(config)) visit(g);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

Graph one_random_draw(const GenConfig& c, std::uint64_t seed) {
  const FamilySpec f = c.family.normalized();
  std::mt19937_64 rng(seed);
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < c.n; ++u)
    for (Vertex v = u + 1; v < c.n; ++v) pairs.emplace_back(u, v);
  // Fisher-Yates with an explicit reduction keeps the sequence identical
  // across standard libraries.
  for (std::size_t i = pairs.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(pairs[i - 1], pairs[j]);
  }
  Graph g(c.n);
  for (const Edge& e : pairs) {
    if (c.max_edges && static_cast<int>(g.size()) >= *c.max_edges) break;
    if (f.max_degree_cap &&
        (g.degree(e.u) >= *f.max_degree_cap || g.degree(e.v) >= *f.max_degree_cap))
      continue;
    bool closes_forbidden = false;
    for (int len : f.forbidden_cycle_lengths)
      if (find_path_of_length(g, e.u, e.v, len - 1)) {
        closes_forbidden = true;
        break;
      }
    if (closes_forbidden) continue;
    Graph h = g.with_edge(e.u, e.v);
    if (f.require_planar && !is_planar(h)) continue;
    g = std::move(h);
  }
  return g;
}

}  // namespace

Graph random_family_graph(const GenConfig& config, int index) {
  if (config.n < 0) throw std::invalid_argument("random_family_graph: negative order");
  constexpr int kAttempts = 1000;
  const std::uint64_t base = derive_seed(config.seed, static_cast<std::uint64_t>(index));
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Graph g = one_random_draw(config, derive_seed(base, static_cast<std::uint64_t>(attempt)));
    if (!config.connected || is_connected(g)) return g;
  }
  throw std::runtime_error("random_family_graph: no connected graph after " +
                           std::to_string(kAttempts) + " draws");
}

std::vector<Graph> random_family(const GenConfig& config) {
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(std::max(config.count, 0)));
  for (int i = 0; i < config.count; ++i) out.push_back(random_family_graph(config, i));
  return out;
}

std::string to_string(ExceptionKind kind) {
  switch (kind) {
    case ExceptionKind::none: return "none";
    case ExceptionKind::complete: return "complete";
    case ExceptionKind::odd_cycle: return "odd-cycle";
    case ExceptionKind::balanced_biclique_odd: return "balanced-biclique-odd-delta";
  }
  return "unknown";
}

ExceptionCheck is_exception(const Graph& g, int m) {
  if (m != g.max_degree())
    throw std::invalid_argument("is_exception: m must equal the maximum degree");
  if (!is_connected(g)) throw std::invalid_argument("is_exception: graph must be connected");
  const long long n = g.order();
  const long long e = static_cast<long long>(g.size());
  if (e == n * (n - 1) / 2) return {true, ExceptionKind::complete};
  if (m == 2 && n % 2 == 1 && e == n && g.min_degree() == 2) return {true, ExceptionKind::odd_cycle};
  if (m % 2 == 1 && n == 2LL * m && e == static_cast<long long>(m) * m && g.min_degree() == m &&
      bipartition(g))
    return {true, ExceptionKind::balanced_biclique_odd};
  return {};
}

}  // namespace equicolor
