#include <doctest.h>

#include <stdexcept>

#include <random>

#include "equicolor/exact_solver.hpp"
#include "equicolor/family.hpp"
#include "equicolor/generate.hpp"
#include "oracles.hpp"

using namespace equicolor;

TEST_CASE("decide_equitable examples") {
  CHECK(decide_equitable(graphs::complete_bipartite(3, 3), 3).verdict == Verdict::no);
  CHECK(decide_equitable(graphs::star(5), 3).verdict == Verdict::no);
  CHECK(decide_equitable(graphs::star(5), 4).verdict == Verdict::yes);
  CHECK(decide_equitable(graphs::cycle(5), 2).verdict == Verdict::no);
  SolveOutcome p4 = decide_equitable(graphs::path(4), 2);
  REQUIRE(p4.verdict == Verdict::yes);
  CHECK(verify_equitable_k_coloring(graphs::path(4), *p4.coloring, 2));
  CHECK_THROWS_AS(decide_equitable(graphs::path(4), 0), std::invalid_argument);
}

TEST_CASE("decide_proper examples") {
  CHECK(decide_proper(graphs::complete(4), 3).verdict == Verdict::no);
  SolveOutcome c6 = decide_proper(graphs::cycle(6), 2);
  REQUIRE(c6.verdict == Verdict::yes);
  CHECK(c6.coloring->class_count() == 2);
  CHECK(is_proper(graphs::cycle(6), *c6.coloring));
  CHECK_THROWS_AS(decide_proper(graphs::cycle(6), 0), std::invalid_argument);
}

TEST_CASE("triangle-free planar graphs up to order 8 are 3-colorable") {
  for (int n = 1; n <= 8; ++n) {
    GenConfig cfg;
    cfg.n = n;
    cfg.family = FamilySpec::triangle_free_planar();
    for (const Graph& g : enumerate_family(cfg))
      CHECK(decide_proper(g, 3).verdict == Verdict::yes);
  }
}

TEST_CASE("exhaustion is a separate verdict") {
  std::mt19937_64 rng(1);
  Graph g = oracle::random_graph(30, 0.5, rng);
  SolveBudget tiny;
  tiny.node_limit = 5;
  SolveOutcome out = decide_equitable(g, 6, tiny);
  CHECK(out.verdict == Verdict::exhausted);
  CHECK_FALSE(out.coloring);
  SolveBudget zero;
  zero.node_limit = 0;
  CHECK_THROWS_AS(decide_equitable(g, 6, zero), std::invalid_argument);
  SolveBudget no_time;
  no_time.time_limit = std::chrono::milliseconds(0);
  CHECK_THROWS_AS(decide_equitable(g, 6, no_time), std::invalid_argument);
}

TEST_CASE("exact solver agrees with partition enumeration on all graphs up to order 6") {
  for (int n = 1; n <= 6; ++n) {
    GenConfig cfg;
    cfg.n = n;
    for (const Graph& g : enumerate_family(cfg))
      for (int k = 1; k <= n; ++k)
        CHECK(decide_equitable(g, k).verdict ==
              (oracle::equitable_colorable(g, k) ? Verdict::yes : Verdict::no));
  }
}

TEST_CASE("proper colorability agrees with assignment enumeration") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = oracle::random_graph(8, 0.45, rng);
    for (int m = 1; m <= 4; ++m)
      CHECK((decide_proper(g, m).verdict == Verdict::yes) == oracle::proper_colorable(g, m));
  }
}

TEST_CASE("verdicts are invariant under relabeling") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = oracle::random_graph(9, 0.4, rng);
    Graph h = g.relabeled(oracle::random_permutation(9, rng));
    for (int k = 2; k <= 5; ++k) CHECK(decide_equitable(g, k).verdict == decide_equitable(h, k).verdict);
  }
}

TEST_CASE("k = max degree + 1 always succeeds on small random graphs") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = oracle::random_graph(12, 0.1 + 0.05 * (trial % 10), rng);
    SolveOutcome out = decide_equitable(g, g.max_degree() + 1);
    CHECK(out.verdict == Verdict::yes);
  }
}

TEST_CASE("more classes than vertices") {
  SolveOutcome out = decide_equitable(graphs::complete(3), 5);
  REQUIRE(out.verdict == Verdict::yes);
  CHECK(out.coloring->class_count() == 5);
  CHECK(decide_equitable(Graph(0), 2).verdict == Verdict::yes);
}
