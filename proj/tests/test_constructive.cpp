#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>

#include "equicolor/constructive.hpp"
#include "equicolor/generate.hpp"
#include "oracles.hpp"

using namespace equicolor;

namespace {

std::optional<Partition> exact_sub(const Graph& g, int m) {
  SolveOutcome out = decide_equitable(g, m);
  if (out.verdict == Verdict::yes) return out.coloring;
  return std::nullopt;
}

// x = 0, y = 1; V1 = {1,2}, V2 = {3,4,5}, V3 = {6,7,8}. Vertex 4 escapes V1,
// vertex 6 escapes only V2, so the chain runs V3 -> V2 -> V1.
Graph nine_vertex_instance() {
  return Graph(9, {{0, 1}, {0, 3}, {3, 1}, {5, 2}, {6, 1}, {6, 2}, {7, 2}, {8, 1}, {7, 3}, {8, 5}});
}
Partition nine_vertex_coloring() { return Partition(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}); }

// x = 0 with neighbors 1, 2, 4 (delta = 3); vertex 6 in the fourth class has
// no neighbor in V1 = {1}.
Graph single_step_instance() {
  return Graph(8, {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {1, 7}, {2, 5}, {2, 7}, {3, 4}, {3, 7},
                   {4, 7}, {5, 7}});
}
Partition single_step_coloring() { return Partition(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}); }

// Every vertex outside V1 = {1} is adjacent to 1: nothing escapes.
Graph closed_instance() {
  return Graph(8, {{0, 1}, {0, 2}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {3, 4},
                   {3, 6}, {2, 5}, {5, 6}, {2, 7}, {4, 7}});
}

// Two classes of three: x = 0, y = 1, V1 = {1,2}, V2 = {3,4,5}.
Graph two_class_instance() { return Graph(6, {{0, 1}, {3, 2}, {4, 2}, {5, 1}}); }
Partition two_class_coloring() { return Partition(6, {{0, 1, 2}, {3, 4, 5}}); }

}  // namespace

TEST_CASE("solve_equitable examples") {
  ConstructiveResult c6 = solve_equitable(graphs::cycle(6), 3, FamilySpec::any());
  REQUIRE(c6.outcome.verdict == Verdict::yes);
  CHECK(c6.outcome.coloring->sizes() == std::vector<int>{2, 2, 2});

  ConstructiveResult q3 = solve_equitable(graphs::cube(), 6, FamilySpec::triangle_free_planar());
  REQUIRE(q3.outcome.verdict == Verdict::yes);
  CHECK(decide_equitable(graphs::cube(), 6).verdict == Verdict::yes);
  CHECK(verify_equitable_k_coloring(graphs::cube(), *q3.outcome.coloring, 6));

  CHECK_THROWS_AS(solve_equitable(graphs::cycle(6), 0, FamilySpec::any()), std::invalid_argument);
  CHECK_THROWS_AS(solve_equitable(graphs::complete(4), 3, FamilySpec::triangle_free_planar()),
                  std::invalid_argument);
}

TEST_CASE("triangle-free planar graphs with max degree 6 and order 6t are equitably 6-colorable") {
  GenConfig cfg;
  cfg.family = FamilySpec::parse("planar,forbid=3,maxdeg=6");
  int tested = 0;
  for (int n : {12, 18}) {
    cfg.n = n;
    cfg.seed = static_cast<std::uint64_t>(n);
    for (int i = 0; i < 60; ++i) {
      Graph g = random_family_graph(cfg, i);
      if (g.max_degree() != 6) continue;
      ++tested;
      ConstructiveResult res = solve_equitable(g, 6, FamilySpec::triangle_free_planar());
      REQUIRE(res.outcome.verdict == Verdict::yes);
      CHECK(verify_equitable_k_coloring(g, *res.outcome.coloring, 6));
    }
  }
  CHECK(tested > 10);
}

TEST_CASE("pad_order plans") {
  // order 6t + 5 and 6t + 4
  PadPlan k1 = pad_order(graphs::cycle(11), 6);
  CHECK(k1.kind == PadPlan::Kind::union_complete);
  CHECK(k1.pad_order == 1);
  PadPlan k2 = pad_order(graphs::cycle(10), 6);
  CHECK(k2.kind == PadPlan::Kind::union_complete);
  CHECK(k2.pad_order == 2);
  CHECK(pad_order(graphs::cycle(12), 6).kind == PadPlan::Kind::none);

  // order 6t + 1 with an isolated vertex
  Graph g = graphs::cycle(6).disjoint_union(Graph(1));
  PadPlan rm = pad_order(g, 6);
  REQUIRE(rm.kind == PadPlan::Kind::remove_vertex);
  CHECK(rm.removed == 6);
  Partition without(7, {{0}, {1}, {2}, {3}, {4}, {5}}, 6);
  auto placed = reinsert_vertex(g, without, 6);
  REQUIRE(placed);
  CHECK(verify_equitable_k_coloring(g, *placed, 6));
  ConstructiveResult res = solve_equitable(g, 6, FamilySpec::any());
  REQUIRE(res.outcome.verdict == Verdict::yes);
  CHECK(res.trace.count(Mechanism::pad) >= 1);
}

TEST_CASE("reinsertion fails when every smallest class holds a neighbor") {
  // vertex 4 is adjacent to the two singleton classes
  Graph g(5, {{4, 2}, {4, 3}});
  Partition without(5, {{0, 1}, {2}, {3}}, 4);
  CHECK_FALSE(reinsert_vertex(g, without, 4));
  CHECK_THROWS_AS(reinsert_vertex(g, Partition(5, {{0, 1, 4}, {2}, {3}}), 4),
                  std::invalid_argument);
}

TEST_CASE("make_state validates its preconditions") {
  Graph g = nine_vertex_instance();
  Partition p = nine_vertex_coloring();
  CHECK_THROWS_AS(make_state(g, p, 0, 2, 3), std::invalid_argument);   // not an edge
  CHECK_THROWS_AS(make_state(g, p, 0, 3, 3), std::invalid_argument);   // different classes
  CHECK_THROWS_AS(make_state(g, p, 0, 1, 2), std::invalid_argument);   // wrong class count
  SolverState s = make_state(g, p, 0, 1, 3);
  CHECK(s.t == 3);
  CHECK(s.delta == 2);
  CHECK(s.classes[0] == std::vector<Vertex>{1, 2});
  CHECK(s.class_of[0] == -1);
  CHECK(s.original_index == std::vector<int>{0, 1, 2});
}

TEST_CASE("build_R on the nine-vertex instance follows V3 -> V2 -> V1") {
  Graph g = nine_vertex_instance();
  SolverState s = make_state(g, nine_vertex_coloring(), 0, 1, 3);
  RSet r = build_R(s);
  REQUIRE(r.size() == 3);
  CHECK(r.order == std::vector<int>{0, 1, 2});
  CHECK(r.witness[1].u == 4);
  CHECK(r.witness[1].parent == 0);
  CHECK(r.witness[2].u == 6);
  CHECK(r.witness[2].parent == 1);

  auto swap = chain_swap_place(s, r);
  REQUIRE(swap);
  CHECK(swap->chain_length == 3);
  CHECK(swap->coloring.classes() ==
        std::vector<std::vector<Vertex>>{{1, 2, 4}, {3, 5, 6}, {0, 7, 8}});
  CHECK(verify_equitable_k_coloring(g, swap->coloring, 3));
}

TEST_CASE("single-step chain when a class beyond delta escapes V1 directly") {
  Graph g = single_step_instance();
  SolverState s = make_state(g, single_step_coloring(), 0, 1, 4);
  CHECK(s.delta == 3);
  RSet r = build_R(s);
  CHECK(r.contains(1));  // vertex 2 of V2 has no neighbor in V1
  auto swap = chain_swap_place(s, r);
  REQUIRE(swap);
  CHECK(swap->chain_length == 2);
  CHECK(swap->coloring.classes() ==
        std::vector<std::vector<Vertex>>{{1, 6}, {2, 3}, {4, 5}, {0, 7}});
  CHECK(swap->coloring.sizes() == std::vector<int>{2, 2, 2, 2});
  CHECK(verify_equitable_k_coloring(g, swap->coloring, 4));
}

TEST_CASE("no escapes leaves R = {V1} and the chain swap inapplicable") {
  Graph g = closed_instance();
  SolverState s = make_state(g, single_step_coloring(), 0, 1, 4);
  RSet r = build_R(s);
  CHECK(r.size() == 1);
  CHECK_FALSE(chain_swap_place(s, r));
  // Every B-vertex sees only gamma = 1 in V1, but the split remainder still
  // contains gamma next to all of its neighbors, so no triple repairs.
  auto triples = find_repair_triples(s, r);
  CHECK_FALSE(triples.empty());
  for (const auto& tr : triples) CHECK_FALSE(repair_split(s, r, tr, exact_sub));
}

TEST_CASE("repair split on a two-class graph") {
  Graph g = two_class_instance();
  SolverState s = make_state(g, two_class_coloring(), 0, 1, 2);
  RSet r = build_R(s);
  REQUIRE(r.size() == 1);
  CHECK_FALSE(chain_swap_place(s, r));
  auto tr = find_repair_triple(s, r);
  REQUIRE(tr);
  CHECK(tr->gamma == 1);
  CHECK(tr->alpha == 0);
  CHECK(tr->beta == 5);
  std::vector<Vertex> rest = split_remainder(s, r, *tr);
  CHECK(rest == std::vector<Vertex>{1, 3, 4});
  CHECK(static_cast<int>(rest.size()) == (s.m - r.size()) * s.t);
  auto joined = repair_split(s, r, *tr, exact_sub);
  REQUIRE(joined);
  CHECK(joined->classes() == std::vector<std::vector<Vertex>>{{0, 2, 5}, {1, 3, 4}});
  CHECK(verify_equitable_k_coloring(g, *joined, 2));
}

TEST_CASE("no triple when only x has a unique neighbor in V1") {
  // 3, 4 and 5 each see both 1 and 2, so x = 0 is the lone candidate.
  Graph g(6, {{0, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {5, 1}, {5, 2}});
  SolverState s = make_state(g, two_class_coloring(), 0, 1, 2);
  RSet r = build_R(s);
  CHECK(r.size() == 1);
  CHECK_FALSE(find_repair_triple(s, r));
}

TEST_CASE("random states satisfy the R-set, chain and triple properties") {
  std::mt19937_64 rng(404);
  GenConfig cfg;
  cfg.family = FamilySpec::parse("forbid=3");
  int states = 0, swaps = 0, repairs = 0;
  for (int trial = 0; trial < 400 && states < 150; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 3);
    const int t = 2 + static_cast<int>(rng() % 3);
    cfg.n = m * t;
    cfg.seed = rng();
    cfg.max_edges = static_cast<int>(cfg.n * (1 + rng() % 3) / 2);
    Graph g = random_family_graph(cfg);
    if (g.size() == 0) continue;
    Vertex x = -1;
    for (Vertex v = 0; v < g.order(); ++v)
      if (g.degree(v) == g.min_positive_degree()) {
        x = v;
        break;
      }
    Vertex y = g.neighbors(x).front();
    SolveOutcome base = decide_equitable(g.without_edge(x, y), m);
    if (base.verdict != Verdict::yes || base.coloring->class_of(x) != base.coloring->class_of(y))
      continue;
    ++states;
    SolverState s = make_state(g, *base.coloring, x, y, m);
    RSet r = build_R(s);
    RSet again = build_R(s);
    CHECK(r.order == again.order);
    CHECK(r.order.front() == 0);
    for (std::size_t i = 1; i < r.order.size(); ++i) {
      int c = r.order[i];
      const Escape& w = r.witness[c];
      CHECK(r.contains(w.parent));
      CHECK(s.class_of[w.u] == c);
      for (Vertex v : s.classes[w.parent]) CHECK_FALSE(g.adjacent(w.u, v));
    }
    // Closure: no class outside R has an escape into R.
    for (int c = 0; c < m; ++c) {
      if (r.contains(c)) continue;
      for (Vertex u : s.classes[c])
        for (int i : r.order) {
          bool hit = false;
          for (Vertex v : s.classes[i]) hit = hit || g.adjacent(u, v);
          CHECK(hit);
        }
    }
    if (auto swap = chain_swap_place(s, r)) {
      ++swaps;
      CHECK(verify_equitable_k_coloring(g, swap->coloring, m));
      CHECK(swap->coloring.sizes() == std::vector<int>(m, t));
      continue;
    }
    for (const RepairTriple& tr : find_repair_triples(s, r)) {
      CHECK_FALSE(g.adjacent(tr.alpha, tr.beta));
      for (Vertex side : {tr.alpha, tr.beta}) {
        int hits = 0;
        for (Vertex v : s.classes[0]) hits += g.adjacent(side, v) ? 1 : 0;
        CHECK(hits == 1);
        CHECK(g.adjacent(side, tr.gamma));
      }
      if (auto joined = repair_split(s, r, tr, exact_sub)) {
        ++repairs;
        CHECK(verify_equitable_k_coloring(g, *joined, m));
      }
    }
  }
  CHECK(states > 20);
  CHECK(swaps > 0);
  MESSAGE("states " << states << ", swaps " << swaps << ", repairs " << repairs);
}

TEST_CASE("constructive and exact verdicts agree on random small graphs") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 10);
    Graph g = oracle::random_graph(n, 0.15 + 0.05 * (trial % 6), rng);
    const int m = std::max(1, g.max_degree());
    ConstructiveResult res = solve_equitable(g, m, FamilySpec::any());
    SolveOutcome ex = decide_equitable(g, m);
    CHECK(res.outcome.verdict == ex.verdict);
    if (res.outcome.coloring) CHECK(verify_equitable_k_coloring(g, *res.outcome.coloring, m));
  }
}

TEST_CASE("trace records carry per-level data") {
  ConstructiveResult res = solve_equitable(graphs::cube(), 4, FamilySpec::any());
  REQUIRE(res.outcome.verdict == Verdict::yes);
  int total = 0;
  for (int i = 0; i < kMechanismCount; ++i) total += res.trace.counts[i];
  CHECK(total == static_cast<int>(res.trace.levels.size()));
  for (const LevelRecord& level : res.trace.levels) {
    if (level.mechanism == Mechanism::chain_swap) {
      CHECK(level.r >= 2);
      CHECK(level.chain_length >= 2);
    }
  }
}

TEST_CASE("optional shortcuts route small orders to the exact solver") {
  ConstructiveOptions opts;
  opts.exact_order_cutoff = 18;
  ConstructiveResult res = solve_equitable(graphs::cube(), 6, FamilySpec::any(), {}, opts);
  REQUIRE(res.outcome.verdict == Verdict::yes);
  CHECK(res.trace.count(Mechanism::small_case_exact) == 1);
  ConstructiveOptions dense;
  dense.dense_shortcut = true;
  ConstructiveResult k33 =
      solve_equitable(graphs::complete_bipartite(3, 3), 3, FamilySpec::any(), {}, dense);
  CHECK(k33.outcome.verdict == Verdict::no);
  CHECK(k33.trace.count(Mechanism::small_case_exact) == 1);
}

TEST_CASE("exhausted budgets propagate") {
  std::mt19937_64 rng(8);
  Graph g = oracle::random_graph(40, 0.3, rng);
  SolveBudget tiny;
  tiny.time_limit = std::chrono::milliseconds(1);
  tiny.node_limit = 1;
  ConstructiveOptions opts;
  opts.exact_order_cutoff = 40;
  ConstructiveResult res = solve_equitable(g, 5, FamilySpec::any(), tiny, opts);
  CHECK(res.outcome.verdict == Verdict::exhausted);
  CHECK_FALSE(res.outcome.coloring);
}
