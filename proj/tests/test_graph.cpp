#include <doctest.h>

#include <stdexcept>

#include <random>
#include <sstream>

#include "equicolor/edge_list_io.hpp"
#include "equicolor/family.hpp"
#include "equicolor/generate.hpp"
#include "equicolor/graph.hpp"
#include "equicolor/graph_algorithms.hpp"
#include "oracles.hpp"

using namespace equicolor;

TEST_CASE("graph construction rejects loops, duplicates and bad endpoints") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  Graph g(4, {{2, 1}, {0, 3}});
  CHECK(g.size() == 2);
  CHECK(g.edges().front() == Edge(0, 3));
  CHECK(g.adjacent(1, 2));
  CHECK_FALSE(g.adjacent(0, 1));
}

TEST_CASE("degree sum and adjacency symmetry hold on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = oracle::random_graph(10, 0.35, rng);
    int sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      sum += g.degree(v);
      for (Vertex w : g.neighbors(v)) CHECK(g.adjacent(w, v));
    }
    CHECK(sum == 2 * static_cast<int>(g.size()));
  }
}

TEST_CASE("derived graphs") {
  Graph c = graphs::cycle(5);
  Graph p = c.without_edge(0, 4);
  CHECK(p == graphs::path(5));
  CHECK_THROWS(p.without_edge(0, 4));
  CHECK(p.with_edge(0, 4) == c);
  std::vector<Vertex> keep{1, 2, 3};
  CHECK(c.induced(keep) == graphs::path(3));
  Graph u = graphs::complete(2).disjoint_union(graphs::complete(3));
  CHECK(u.order() == 5);
  CHECK(u.size() == 4);
  CHECK(u.adjacent(2, 4));
}

TEST_CASE("girth examples") {
  CHECK(girth(graphs::cycle(5)) == 5);
  CHECK(girth(graphs::complete_bipartite(3, 3)) == 4);
  CHECK_FALSE(girth(graphs::path(4)).has_value());
  CHECK(girth(graphs::petersen()) == 5);
  CHECK(girth(graphs::cube()) == 4);
  CHECK(girth(graphs::complete(4)) == 3);
}

TEST_CASE("has_cycle_of_length examples") {
  CHECK(has_cycle_of_length(graphs::complete(4), 3));
  CHECK_FALSE(has_cycle_of_length(graphs::cycle(6), 4));
  CHECK(has_cycle_of_length(graphs::petersen(), 5));
  CHECK(oracle::has_cycle(graphs::petersen(), 5));
  CHECK_THROWS_AS(has_cycle_of_length(graphs::cycle(4), 2), std::invalid_argument);
}

TEST_CASE("cycle detection agrees with brute-force cycle enumeration") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = oracle::random_graph(8, 0.3, rng);
    for (int k = 3; k <= 8; ++k) CHECK(has_cycle_of_length(g, k) == oracle::has_cycle(g, k));
  }
}

TEST_CASE("girth is the shortest cycle length") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = oracle::random_graph(9, 0.25, rng);
    auto gi = girth(g);
    if (!gi) {
      for (int k = 3; k <= 9; ++k) CHECK_FALSE(has_cycle_of_length(g, k));
      continue;
    }
    CHECK(has_cycle_of_length(g, *gi));
    for (int j = 3; j < *gi; ++j) CHECK_FALSE(has_cycle_of_length(g, j));
  }
}

TEST_CASE("planarity examples") {
  CHECK(is_planar(graphs::complete(4)));
  CHECK_FALSE(is_planar(graphs::complete(5)));
  CHECK_FALSE(is_planar(graphs::complete_bipartite(3, 3)));
  CHECK_FALSE(is_planar(graphs::petersen()));
  CHECK(is_planar(graphs::cube()));
}

TEST_CASE("planarity agrees with Kuratowski subdivision search on all graphs up to order 7") {
  for (int n = 1; n <= 7; ++n) {
    GenConfig cfg;
    cfg.n = n;
    for (const Graph& g : enumerate_family(cfg))
      CHECK(is_planar(g) == !oracle::has_kuratowski_subdivision(g));
  }
}

TEST_CASE("planarity agrees with Kuratowski subdivision search on random order-8 graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = oracle::random_graph(8, 0.25 + 0.3 * (trial % 3), rng);
    CHECK(is_planar(g) == !oracle::has_kuratowski_subdivision(g));
  }
}

TEST_CASE("planarity and girth are invariant under relabeling") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = oracle::random_graph(9, 0.4, rng);
    Graph h = g.relabeled(oracle::random_permutation(9, rng));
    CHECK(is_planar(g) == is_planar(h));
    CHECK(girth(g) == girth(h));
  }
}

TEST_CASE("edges_between examples and symmetry") {
  Graph k33 = graphs::complete_bipartite(3, 3);
  std::vector<Vertex> left{0, 1, 2}, right{3, 4, 5}, none;
  CHECK(edges_between(k33, left, right) == 9);
  CHECK(edges_between(k33, none, right) == 0);
  std::vector<Vertex> even{0, 2, 4}, odd{1, 3, 5};
  CHECK(edges_between(graphs::cycle(6), even, odd) == 6);
  std::vector<Vertex> overlap{2, 3};
  CHECK_THROWS_AS(edges_between(k33, left, overlap), std::invalid_argument);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = oracle::random_graph(10, 0.4, rng);
    std::vector<Vertex> u, w;
    for (Vertex v = 0; v < 10; ++v) (rng() % 2 ? u : w).push_back(v);
    CHECK(edges_between(g, u, w) == edges_between(g, w, u));
  }
}

TEST_CASE("family specs normalize idempotently") {
  FamilySpec g6 = FamilySpec::planar_girth(6);
  FamilySpec n = g6.normalized();
  CHECK(n == n.normalized());
  CHECK(n.forbids(3));
  CHECK(n.forbids(4));
  CHECK(n.forbids(5));
  CHECK_FALSE(n.forbids(6));
  FamilySpec tf = FamilySpec::parse("planar,forbid=3");
  CHECK(tf.normalized() == FamilySpec::triangle_free_planar().normalized());
  CHECK(FamilySpec::parse(n.to_string()).normalized() == n);
  CHECK_THROWS_AS(FamilySpec::parse("bogus"), std::invalid_argument);
}

TEST_CASE("matches_family examples") {
  FamilySpec planar34 = FamilySpec::parse("planar,forbid=3:4");
  CHECK(matches_family(graphs::cycle(5), planar34));
  FamilySpec no_triangle = FamilySpec::parse("forbid=3");
  FamilyCheck k4 = matches_family(graphs::complete(4), no_triangle);
  CHECK_FALSE(k4);
  REQUIRE(k4.witness.size() == 3);
  Graph k4g = graphs::complete(4);
  CHECK(k4g.adjacent(k4.witness[0], k4.witness[1]));
  CHECK(k4g.adjacent(k4.witness[1], k4.witness[2]));
  CHECK(k4g.adjacent(k4.witness[2], k4.witness[0]));
  CHECK(matches_family(graphs::cube(), FamilySpec::triangle_free_planar()));
  CHECK_FALSE(matches_family(graphs::complete_bipartite(3, 3), FamilySpec::triangle_free_planar()));
}

TEST_CASE("edge-list format round-trips and rejects malformed input") {
  Graph g = graphs::petersen();
  std::istringstream in(to_edge_list_string(g, "petersen"));
  CHECK(read_edge_list(in) == g);

  auto parse = [](const std::string& text) {
    std::istringstream s(text);
    return read_edge_list(s);
  };
  CHECK(parse("c hi\n\np 3 2\ne 1 2\nc mid\ne 2 3\n") == graphs::path(3));
  CHECK_THROWS_AS(parse("e 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse("p 3 2\ne 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse("p 3 1\ne 1 4\n"), ParseError);
  CHECK_THROWS_AS(parse("p 3 1\ne 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse("p 3 2\ne 1 2\ne 2 1\n"), ParseError);
  CHECK_THROWS_AS(parse("p 3 1\ne 1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse("p 3 1\np 3 1\ne 1 2\n"), ParseError);
}

TEST_CASE("hash is label-sensitive but stable") {
  CHECK(graphs::cycle(5).hash_hex() == graphs::cycle(5).hash_hex());
  CHECK(graphs::cycle(5).hash_hex().size() == 16);
  CHECK(graphs::cycle(5).hash_hex() != graphs::path(5).hash_hex());
}
