#include <doctest.h>

#include <stdexcept>

#include <map>
#include <random>
#include <set>

#include "equicolor/bounds.hpp"
#include "equicolor/canonical.hpp"
#include "equicolor/exact_solver.hpp"
#include "equicolor/generate.hpp"
#include "equicolor/graph_algorithms.hpp"
#include "oracles.hpp"

using namespace equicolor;

namespace {

// Naive census: every labeled graph on n vertices, filtered, deduplicated by
// the n!-permutation canonical string.
std::set<std::vector<char>> naive_classes(int n, const FamilySpec& family, bool connected) {
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  std::set<std::vector<char>> out;
  for (std::uint64_t mask = 0; mask < (1ULL << all.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1) edges.push_back(all[i]);
    Graph g(n, edges);
    if (connected && !is_connected(g)) continue;
    if (!matches_family(g, family)) continue;
    out.insert(oracle::brute_canonical(g));
  }
  return out;
}

std::size_t count(int n, const FamilySpec& f, bool connected) {
  GenConfig cfg;
  cfg.n = n;
  cfg.family = f;
  cfg.connected = connected;
  return enumerate_family(cfg).size();
}

}  // namespace

TEST_CASE("enumeration counts") {
  CHECK(count(3, FamilySpec::any(), true) == 2);
  CHECK(count(4, FamilySpec::any(), true) == 6);
  CHECK(count(5, FamilySpec::any(), true) == 21);
  CHECK(count(6, FamilySpec::any(), true) == 112);
  CHECK(count(7, FamilySpec::any(), true) == 853);
  CHECK(count(5, FamilySpec::any(), false) == 34);
  CHECK(count(6, FamilySpec::any(), false) == 156);
  CHECK(count(7, FamilySpec::any(), false) == 1044);
}

TEST_CASE("enumeration matches a naive census up to order 6") {
  for (const char* spec : {"", "planar,forbid=3", "forbid=4", "planar,girth=5", "maxdeg=2"}) {
    FamilySpec f = FamilySpec::parse(spec);
    for (int n = 1; n <= 6; ++n)
      for (bool connected : {false, true}) {
        GenConfig cfg;
        cfg.n = n;
        cfg.family = f;
        cfg.connected = connected;
        std::set<std::vector<char>> got;
        for (const Graph& g : enumerate_family(cfg)) got.insert(oracle::brute_canonical(g));
        CHECK(got == naive_classes(n, f, connected));
        CHECK(got.size() == enumerate_family(cfg).size());
      }
  }
}

TEST_CASE("enumerated graphs are pairwise non-isomorphic and in the family") {
  GenConfig cfg;
  cfg.n = 8;
  cfg.family = FamilySpec::triangle_free_planar();
  std::vector<Graph> graphs = enumerate_family(cfg);
  std::set<CanonicalKey> keys;
  for (const Graph& g : graphs) {
    CHECK(matches_family(g, cfg.family));
    keys.insert(canonical_key(g));
  }
  CHECK(keys.size() == graphs.size());
  CHECK(std::is_sorted(graphs.begin(), graphs.end(), [](const Graph& a, const Graph& b) {
    return canonical_key(a) < canonical_key(b);
  }));
}

TEST_CASE("enumeration respects max_edges and the order cap") {
  GenConfig cfg;
  cfg.n = 7;
  cfg.max_edges = 5;
  for (const Graph& g : enumerate_family(cfg)) CHECK(g.size() <= 5);
  cfg.n = 12;
  cfg.max_edges.reset();
  CHECK_THROWS_AS(enumerate_family(cfg), std::invalid_argument);
}

TEST_CASE("canonical form is relabeling invariant and agrees with brute force") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    Graph g = oracle::random_graph(n, 0.2 + 0.1 * (trial % 5), rng);
    Graph h = g.relabeled(oracle::random_permutation(n, rng));
    CHECK(canonical_key(g) == canonical_key(h));
    CHECK(canonical_graph(g) == canonical_graph(h));
  }
  // Keys separate non-isomorphic graphs exactly when brute force does.
  for (int trial = 0; trial < 300; ++trial) {
    Graph a = oracle::random_graph(6, 0.5, rng);
    Graph b = oracle::random_graph(6, 0.5, rng);
    CHECK((canonical_key(a) == canonical_key(b)) ==
          (oracle::brute_canonical(a) == oracle::brute_canonical(b)));
  }
  // Regular graphs stress the refinement.
  CHECK(canonical_key(graphs::petersen()) ==
        canonical_key(graphs::petersen().relabeled(oracle::random_permutation(10, rng))));
  CHECK_FALSE(canonical_key(graphs::cube()) == canonical_key(graphs::cycle(8)));
}

TEST_CASE("random generation is deterministic and stays in the family") {
  GenConfig cfg;
  cfg.n = 40;
  cfg.family = FamilySpec::triangle_free_planar();
  cfg.mode = GenConfig::Mode::random;
  cfg.seed = 5;
  Graph a = random_family_graph(cfg, 3);
  Graph b = random_family_graph(cfg, 3);
  CHECK(a == b);
  CHECK_FALSE(a == random_family_graph(cfg, 4));
  for (int i = 0; i < 20; ++i) {
    Graph g = random_family_graph(cfg, i);
    CHECK(matches_family(g, cfg.family));
    CHECK(static_cast<long long>(g.size()) <= *density_bound(cfg.family, 40));
  }
  cfg.connected = true;
  cfg.n = 15;
  for (int i = 0; i < 10; ++i) CHECK(is_connected(random_family_graph(cfg, i)));
  cfg.count = 7;
  CHECK(random_family(cfg).size() == 7);
  CHECK(derive_seed(1, 2) == derive_seed(1, 2));
  CHECK(derive_seed(1, 2) != derive_seed(1, 3));
}

TEST_CASE("exception detection examples") {
  ExceptionCheck k5 = is_exception(graphs::complete(5), 4);
  CHECK(k5);
  CHECK(k5.kind == ExceptionKind::complete);
  ExceptionCheck c7 = is_exception(graphs::cycle(7), 2);
  CHECK(c7.kind == ExceptionKind::odd_cycle);
  ExceptionCheck k33 = is_exception(graphs::complete_bipartite(3, 3), 3);
  CHECK(k33.kind == ExceptionKind::balanced_biclique_odd);
  CHECK(to_string(k33.kind) == "balanced-biclique-odd-delta");
  CHECK_FALSE(is_exception(graphs::complete_bipartite(4, 4), 4));
  CHECK_FALSE(is_exception(graphs::cycle(6), 2));
  CHECK(is_exception(graphs::complete(2), 1).kind == ExceptionKind::complete);
  CHECK(is_exception(graphs::cycle(3), 2).kind == ExceptionKind::complete);
  CHECK_THROWS_AS(is_exception(graphs::cycle(5), 3), std::invalid_argument);
  CHECK_THROWS_AS(is_exception(graphs::complete(2).disjoint_union(graphs::complete(2)), 1),
                  std::invalid_argument);
}

TEST_CASE("exceptions are exactly the connected graphs without an equitable max-degree coloring") {
  // Up to order 7 the list is complete; beyond that, listed exceptions
  // still fail.
  for (int n = 2; n <= 7; ++n) {
    GenConfig cfg;
    cfg.n = n;
    cfg.connected = true;
    for (const Graph& g : enumerate_family(cfg)) {
      const int m = g.max_degree();
      CHECK(static_cast<bool>(is_exception(g, m)) == !oracle::equitable_colorable(g, m));
    }
  }
  for (const Graph& g : {graphs::complete(8), graphs::complete(9), graphs::cycle(9)})
    CHECK(decide_equitable(g, g.max_degree()).verdict == Verdict::no);
  CHECK(is_exception(graphs::complete(9), 8));
  CHECK(is_exception(graphs::cycle(9), 2));
}
