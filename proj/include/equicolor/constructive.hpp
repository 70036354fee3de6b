#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "equicolor/coloring.hpp"
#include "equicolor/exact_solver.hpp"
#include "equicolor/family.hpp"
#include "equicolor/graph.hpp"

namespace equicolor {

/// How a recursion level of the constructive solver was closed.
enum class Mechanism {
  trivial_merge,
  chain_swap,
  repair_split,
  pad,
  small_case_exact,
  fallback_exact,
};

inline constexpr int kMechanismCount = 6;
std::string to_string(Mechanism m);

struct LevelRecord {
  int depth = 0;  // nesting depth of repair-split sub-solves
  Mechanism mechanism = Mechanism::trivial_merge;
  int order = 0;
  int classes = 0;
  Vertex x = -1;  // re-added edge xy (original labels of this sub-solve)
  Vertex y = -1;
  int r = 0;  // |R| when a state was built
  int delta = 0;
  int chain_length = 0;
  int fallbacks = 0;
  std::string note;
};

struct ConstructiveTrace {
  std::vector<LevelRecord> levels;
  std::array<int, kMechanismCount> counts{};
  int fallback_count = 0;

  void add(LevelRecord record);
  void absorb(const ConstructiveTrace& nested);
  int count(Mechanism m) const { return counts[static_cast<int>(m)]; }
};

struct ConstructiveOptions {
  /// Orders at or below this go straight to the exact solver (0 disables).
  int exact_order_cutoff = 0;
  /// Delegate to the exact solver when m equals the maximum degree and the
  /// maximum degree is at least half the order (0 disables).
  bool dense_shortcut = false;
  /// Repair triples tried per level before falling back.
  int max_repair_triples = 32;
  /// Nesting limit for repair-split sub-solves; deeper ones use the exact solver.
  int max_split_depth = 6;
};

struct ConstructiveResult {
  SolveOutcome outcome;
  ConstructiveTrace trace;
};

/// Equitable m-coloring via edge-minimality recursion: edges are removed one
/// at a time (minimum-degree endpoint x, lowest ids first) and re-added in
/// reverse, each re-addition repaired by a trivial merge, an R-set chain
/// swap, an alpha/beta/gamma repair split, or the exact solver. Orders not
/// divisible by m are handled by pad_order first.
///
/// Throws std::invalid_argument if m < 1 or g is not in the family.
ConstructiveResult solve_equitable(const Graph& g, int m, const FamilySpec& family,
                                   const SolveBudget& budget = {},
                                   const ConstructiveOptions& options = {});

// ---------------------------------------------------------------------------
// Building blocks, exposed for testing.

/// Reduction used when |g| = m t + r with r != 0.
struct PadPlan {
  enum class Kind { none, union_complete, remove_vertex };
  Kind kind = Kind::none;
  int pad_order = 0;      // order of the complete graph added (1 or 2)
  Vertex removed = -1;    // vertex removed for remove_vertex plans
};

/// r = m-1 or m-2: disjoint union with K_{m-r}. Smaller r: remove the
/// lowest-id minimum-degree vertex. r = 0: nothing to do.
PadPlan pad_order(const Graph& g, int m);

/// Re-inserts `v` (with its neighbors taken from g) into a smallest class of
/// `coloring_without_v` (a coloring of g - v relabeled back to g ids) that
/// holds none of its neighbors. Returns nullopt when no class is admissible.
std::optional<Partition> reinsert_vertex(const Graph& g, const Partition& coloring_without_v,
                                         Vertex v);

/// The configuration right after re-adding edge xy when x and y share a class.
///
/// Classes are reindexed so that index 0 holds y (V_1, with x removed) and
/// indices 1..delta-1 hold the other classes containing neighbors of x.
struct SolverState {
  const Graph* graph = nullptr;
  int m = 0;
  int t = 0;
  Vertex x = -1;
  Vertex y = -1;
  int delta = 0;                             // degree of x in graph
  std::vector<std::vector<Vertex>> classes;  // V_1..V_m, x in none of them
  std::vector<int> class_of;                 // reindexed class per vertex, -1 for x
  std::vector<int> original_index;           // reindexed class -> input class index
};

/// Builds the state from an equitable m-coloring of g - xy in which x and y
/// share a class. x must have minimum positive degree in g.
/// Throws std::invalid_argument if the preconditions do not hold.
SolverState make_state(const Graph& g, const Partition& coloring, Vertex x, Vertex y, int m);

/// Escape witness: vertex `u` of the admitted class has no neighbor in `parent`.
struct Escape {
  Vertex u = -1;
  int parent = -1;
};

/// Least fixpoint of the escape rule starting from V_1.
struct RSet {
  std::vector<char> member;      // per reindexed class
  std::vector<int> order;        // admission order; order[0] == 0
  std::vector<Escape> witness;   // per reindexed class; unset for V_1 and non-members

  int size() const { return static_cast<int>(order.size()); }
  bool contains(int c) const { return member[c] != 0; }
};

RSet build_R(const SolverState& s);

/// Vertices of B = V(G) - A, including x.
std::vector<Vertex> b_side(const SolverState& s, const RSet& rset);

/// The class rotation along the escape chain ending in some class with index
/// at least delta (0-based), returned as a coloring of the whole graph with
/// the input class order. nullopt when R stays inside V_1..V_delta.
struct ChainSwap {
  Partition coloring;
  int chain_length = 0;  // number of classes on the chain, including V_1
  int target_class = 0;  // reindexed
};
std::optional<ChainSwap> chain_swap_place(const SolverState& s, const RSet& rset);

/// alpha, beta in B nonadjacent, both with gamma in V_1 as their only V_1 neighbor.
struct RepairTriple {
  Vertex alpha = -1;
  Vertex beta = -1;
  Vertex gamma = -1;
};

/// All triples in (gamma, alpha, beta) lexicographic order, up to `limit`.
std::vector<RepairTriple> find_repair_triples(const SolverState& s, const RSet& rset,
                                              int limit = 1 << 30);
std::optional<RepairTriple> find_repair_triple(const SolverState& s, const RSet& rset);

/// Splits along the triple: the R-classes become (V_1 - gamma) + {alpha, beta},
/// the other R-classes unchanged; B_1 = (B + gamma) - {alpha, beta} is colored
/// with m - r classes by `sub_solver` (a callable Graph, int -> optional coloring).
/// Returns the joined coloring of the whole graph in input class order, or
/// nullopt if the sub-coloring failed.
template <typename SubSolver>
std::optional<Partition> repair_split(const SolverState& s, const RSet& rset,
                                      const RepairTriple& triple, SubSolver&& sub_solver);

/// Vertex set B_1 for a triple, sorted.
std::vector<Vertex> split_remainder(const SolverState& s, const RSet& rset,
                                    const RepairTriple& triple);

/// Joins the repaired R-classes with a coloring of G[B_1] into a coloring of
/// the whole graph (input class order: R-classes keep their slots, the B_1
/// classes fill the remaining slots in order).
Partition join_split(const SolverState& s, const RSet& rset, const RepairTriple& triple,
                     const std::vector<Vertex>& remainder, const Partition& remainder_coloring);

template <typename SubSolver>
std::optional<Partition> repair_split(const SolverState& s, const RSet& rset,
                                      const RepairTriple& triple, SubSolver&& sub_solver) {
  std::vector<Vertex> remainder = split_remainder(s, rset, triple);
  Graph sub = s.graph->induced(remainder);
  std::optional<Partition> sub_coloring = sub_solver(sub, s.m - rset.size());
  if (!sub_coloring) return std::nullopt;
  return join_split(s, rset, triple, remainder, *sub_coloring);
}

}  // namespace equicolor
