#include "equicolor/constructive.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace equicolor {

std::string to_string(Mechanism m) {
  switch (m) {
    case Mechanism::trivial_merge: return "trivial-merge";
    case Mechanism::chain_swap: return "chain-swap";
    case Mechanism::repair_split: return "repair-split";
    case Mechanism::pad: return "pad";
    case Mechanism::small_case_exact: return "small-case-exact";
    case Mechanism::fallback_exact: return "fallback-exact";
  }
  return "unknown";
}

void ConstructiveTrace::add(LevelRecord record) {
  ++counts[static_cast<int>(record.mechanism)];
  if (record.mechanism == Mechanism::fallback_exact) ++fallback_count;
  levels.push_back(std::move(record));
}

void ConstructiveTrace::absorb(const ConstructiveTrace& nested) {
  for (int i = 0; i < kMechanismCount; ++i) counts[i] += nested.counts[i];
  fallback_count += nested.fallback_count;
  levels.insert(levels.end(), nested.levels.begin(), nested.levels.end());
}

// ---------------------------------------------------------------------------
// Building blocks

PadPlan pad_order(const Graph& g, int m) {
  if (m < 1) throw std::invalid_argument("pad_order: m must be at least 1");
  PadPlan plan;
  const int r = g.order() % m;
  if (r == 0) return plan;
  if (r == m - 1 || r == m - 2) {
    plan.kind = PadPlan::Kind::union_complete;
    plan.pad_order = m - r;
    return plan;
  }
  plan.kind = PadPlan::Kind::remove_vertex;
  Vertex best = 0;
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) < g.degree(best)) best = v;
  plan.removed = best;
  return plan;
}

std::optional<Partition> reinsert_vertex(const Graph& g, const Partition& coloring_without_v,
                                         Vertex v) {
  if (coloring_without_v.uncolored() != v)
    throw std::invalid_argument("reinsert_vertex: v must be the uncolored vertex");
  auto sizes = coloring_without_v.sizes();
  if (sizes.empty()) return std::nullopt;
  const int smallest = *std::min_element(sizes.begin(), sizes.end());
  std::vector<char> blocked(sizes.size(), 0);
  for (Vertex w : g.neighbors(v)) blocked[coloring_without_v.class_of(w)] = 1;
  for (int c = 0; c < static_cast<int>(sizes.size()); ++c) {
    if (sizes[c] != smallest || blocked[c]) continue;
    Move mv{v, kUncolored, c};
    return apply_chain(coloring_without_v, std::span<const Move>(&mv, 1));
  }
  return std::nullopt;
}

SolverState make_state(const Graph& g, const Partition& coloring, Vertex x, Vertex y, int m) {
  const int n = g.order();
  if (m < 1 || n % m != 0) throw std::invalid_argument("make_state: order must be a multiple of m");
  if (coloring.universe() != n || coloring.class_count() != m || coloring.uncolored())
    throw std::invalid_argument("make_state: coloring must cover the graph with m classes");
  if (!g.adjacent(x, y)) throw std::invalid_argument("make_state: xy must be an edge");
  if (coloring.class_of(x) != coloring.class_of(y))
    throw std::invalid_argument("make_state: x and y must share a class");
  if (g.degree(x) != g.min_positive_degree())
    throw std::invalid_argument("make_state: x must have minimum positive degree");

  SolverState s;
  s.graph = &g;
  s.m = m;
  s.t = n / m;
  s.x = x;
  s.y = y;
  s.delta = g.degree(x);

  const int home = coloring.class_of(x);
  std::vector<int> near;  // other classes holding neighbors of x
  for (Vertex w : g.neighbors(x)) {
    if (w == y) continue;
    int c = coloring.class_of(w);
    if (c == home) throw std::invalid_argument("make_state: coloring is improper on g - xy");
    near.push_back(c);
  }
  std::sort(near.begin(), near.end());
  near.erase(std::unique(near.begin(), near.end()), near.end());

  s.original_index.push_back(home);
  for (int c : near) s.original_index.push_back(c);
  for (int c = 0; c < m; ++c)
    if (c != home && !std::binary_search(near.begin(), near.end(), c))
      s.original_index.push_back(c);

  s.classes.resize(m);
  s.class_of.assign(n, -1);
  for (int c = 0; c < m; ++c) {
    for (Vertex v : coloring.members(s.original_index[c])) {
      if (v == x) continue;
      s.classes[c].push_back(v);
      s.class_of[v] = c;
    }
  }
  return s;
}

namespace {

bool has_neighbor_in(const Graph& g, Vertex u, const std::vector<Vertex>& cls) {
  for (Vertex w : g.neighbors(u))
    if (std::binary_search(cls.begin(), cls.end(), w)) return true;
  return false;
}

Partition reindexed_partition(const SolverState& s) {
  return Partition(s.graph->order(), s.classes, s.x);
}

Partition to_input_order(const SolverState& s, const Partition& reindexed) {
  std::vector<std::vector<Vertex>> classes(s.m);
  for (int c = 0; c < s.m; ++c) classes[s.original_index[c]] = reindexed.members(c);
  return Partition(reindexed.universe(), std::move(classes));
}

}  // namespace

RSet build_R(const SolverState& s) {
  const Graph& g = *s.graph;
  RSet rset;
  rset.member.assign(s.m, 0);
  rset.witness.assign(s.m, Escape{});
  rset.member[0] = 1;
  rset.order.push_back(0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 0; j < s.m; ++j) {
      if (rset.member[j]) continue;
      bool admitted = false;
      for (std::size_t idx = 0; idx < rset.order.size() && !admitted; ++idx) {
        int i = rset.order[idx];
        for (Vertex u : s.classes[j]) {
          if (!has_neighbor_in(g, u, s.classes[i])) {
            rset.member[j] = 1;
            rset.witness[j] = Escape{u, i};
            rset.order.push_back(j);
            admitted = true;
            changed = true;
            break;
          }
        }
      }
    }
  }
  return rset;
}

std::vector<Vertex> b_side(const SolverState& s, const RSet& rset) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < s.graph->order(); ++v) {
    int c = s.class_of[v];
    if (c < 0 || !rset.contains(c)) out.push_back(v);
  }
  return out;
}

std::optional<ChainSwap> chain_swap_place(const SolverState& s, const RSet& rset) {
  const Graph& g = *s.graph;
  auto chain_to = [&](int k) {
    std::vector<int> chain{k};
    while (chain.back() != 0) chain.push_back(rset.witness[chain.back()].parent);
    std::reverse(chain.begin(), chain.end());
    return chain;  // V_1, ..., V_k
  };
  std::vector<int> best;
  for (int k : rset.order) {
    if (k < s.delta) continue;
    if (has_neighbor_in(g, s.x, s.classes[k]))
      throw std::logic_error("chain_swap_place: x has a neighbor beyond V_delta");
    std::vector<int> chain = chain_to(k);
    if (best.empty() || chain.size() < best.size() ||
        (chain.size() == best.size() && k < best.back()))
      best = std::move(chain);
  }
  if (best.empty()) return std::nullopt;

  std::vector<Move> moves;
  for (std::size_t j = 1; j < best.size(); ++j) {
    int cls = best[j];
    moves.push_back(Move{rset.witness[cls].u, cls, best[j - 1]});
  }
  moves.push_back(Move{s.x, kUncolored, best.back()});
  Partition rotated = apply_chain(reindexed_partition(s), moves);
  ChainSwap out{to_input_order(s, rotated), static_cast<int>(best.size()), best.back()};
  return out;
}

std::vector<RepairTriple> find_repair_triples(const SolverState& s, const RSet& rset, int limit) {
  const Graph& g = *s.graph;
  const auto& v1 = s.classes[0];
  // B-vertices whose only V_1-neighbor is gamma, grouped by gamma
  std::vector<std::vector<Vertex>> by_gamma(v1.size());
  for (Vertex u : b_side(s, rset)) {
    int hits = 0;
    std::size_t where = 0;
    for (Vertex w : g.neighbors(u)) {
      auto it = std::lower_bound(v1.begin(), v1.end(), w);
      if (it != v1.end() && *it == w) {
        ++hits;
        where = static_cast<std::size_t>(it - v1.begin());
        if (hits > 1) break;
      }
    }
    if (hits == 1) by_gamma[where].push_back(u);
  }
  std::vector<RepairTriple> out;
  for (std::size_t gi = 0; gi < v1.size(); ++gi) {
    const auto& cand = by_gamma[gi];
    for (std::size_t a = 0; a < cand.size(); ++a)
      for (std::size_t b = a + 1; b < cand.size(); ++b) {
        if (g.adjacent(cand[a], cand[b])) continue;
        out.push_back(RepairTriple{cand[a], cand[b], v1[gi]});
        if (static_cast<int>(out.size()) >= limit) return out;
      }
  }
  return out;
}

std::optional<RepairTriple> find_repair_triple(const SolverState& s, const RSet& rset) {
  auto all = find_repair_triples(s, rset, 1);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::vector<Vertex> split_remainder(const SolverState& s, const RSet& rset,
                                    const RepairTriple& triple) {
  std::vector<Vertex> out;
  for (Vertex v : b_side(s, rset))
    if (v != triple.alpha && v != triple.beta) out.push_back(v);
  out.push_back(triple.gamma);
  std::sort(out.begin(), out.end());
  return out;
}

Partition join_split(const SolverState& s, const RSet& rset, const RepairTriple& triple,
                     const std::vector<Vertex>& remainder, const Partition& remainder_coloring) {
  std::vector<std::vector<Vertex>> classes(s.m);
  for (int c : rset.order) {
    std::vector<Vertex> members = s.classes[c];
    if (c == 0) {
      members.erase(std::remove(members.begin(), members.end(), triple.gamma), members.end());
      members.push_back(triple.alpha);
      members.push_back(triple.beta);
    }
    classes[s.original_index[c]] = std::move(members);
  }
  int next = 0;
  for (int c = 0; c < s.m; ++c) {
    if (rset.contains(c)) continue;
    if (next >= remainder_coloring.class_count())
      throw std::invalid_argument("join_split: sub-coloring has too few classes");
    std::vector<Vertex> members;
    for (Vertex local : remainder_coloring.members(next)) members.push_back(remainder[local]);
    classes[s.original_index[c]] = std::move(members);
    ++next;
  }
  if (next != remainder_coloring.class_count())
    throw std::invalid_argument("join_split: sub-coloring has too many classes");
  return Partition(s.graph->order(), std::move(classes));
}

// ---------------------------------------------------------------------------
// Driver

namespace {

using Clock = std::chrono::steady_clock;

struct OutOfBudget {};

struct LevelResult {
  Verdict verdict = Verdict::no;
  std::optional<Partition> coloring;
};

class ConstructiveSolver {
 public:
  ConstructiveSolver(const SolveBudget& budget, const ConstructiveOptions& options)
      : budget_(budget), options_(options), start_(Clock::now()),
        deadline_(start_ + budget.time_limit) {}

  LevelResult solve(const Graph& g, int m, int depth, ConstructiveTrace& trace) {
    check_deadline();
    const int n = g.order();
    if ((options_.exact_order_cutoff > 0 && n <= options_.exact_order_cutoff) ||
        (options_.dense_shortcut && m == g.max_degree() && 2 * g.max_degree() >= n)) {
      LevelResult res = exact(g, m);
      trace.add(record(depth, Mechanism::small_case_exact, g, m, "verdict " + to_string(res.verdict)));
      return res;
    }
    if (n % m != 0) return pad(g, m, depth, trace);
    return core(g, m, depth, trace);
  }

  std::uint64_t nodes() const { return nodes_; }
  Clock::time_point start() const { return start_; }

 private:
  static LevelRecord record(int depth, Mechanism mech, const Graph& g, int m, std::string note = {}) {
    LevelRecord r;
    r.depth = depth;
    r.mechanism = mech;
    r.order = g.order();
    r.classes = m;
    r.note = std::move(note);
    if (mech == Mechanism::fallback_exact) r.fallbacks = 1;
    return r;
  }

  void check_deadline() const {
    if (Clock::now() > deadline_) throw OutOfBudget{};
  }

  LevelResult exact(const Graph& g, int m) {
    check_deadline();
    if (nodes_ >= budget_.node_limit) throw OutOfBudget{};
    SolveBudget remaining;
    remaining.node_limit = budget_.node_limit - nodes_;
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline_ - Clock::now());
    remaining.time_limit = std::max(left, std::chrono::milliseconds(1));
    SolveOutcome out = decide_equitable(g, m, remaining);
    nodes_ += out.stats.nodes;
    if (out.verdict == Verdict::exhausted) throw OutOfBudget{};
    return LevelResult{out.verdict, std::move(out.coloring)};
  }

  LevelResult pad(const Graph& g, int m, int depth, ConstructiveTrace& trace) {
    const int n = g.order();
    PadPlan plan = pad_order(g, m);
    if (plan.kind == PadPlan::Kind::union_complete) {
      Graph padded = g.disjoint_union(graphs::complete(plan.pad_order));
      LevelResult res = solve(padded, m, depth, trace);
      LevelRecord rec = record(depth, Mechanism::pad, g, m, "union K" + std::to_string(plan.pad_order));
      trace.add(rec);
      if (res.verdict != Verdict::yes) return res;
      std::vector<std::vector<Vertex>> classes;
      for (const auto& cls : res.coloring->classes()) {
        std::vector<Vertex> kept;
        for (Vertex v : cls)
          if (v < n) kept.push_back(v);
        classes.push_back(std::move(kept));
      }
      Partition stripped(n, std::move(classes));
      require_valid(g, stripped, m, "pad strip");
      return LevelResult{Verdict::yes, std::move(stripped)};
    }

    const Vertex v = plan.removed;
    std::vector<Vertex> keep;
    for (Vertex u = 0; u < n; ++u)
      if (u != v) keep.push_back(u);
    LevelResult res = solve(g.induced(keep), m, depth, trace);
    if (res.verdict == Verdict::yes) {
      std::vector<int> owner(n, kUncolored);
      for (int i = 0; i < static_cast<int>(keep.size()); ++i)
        owner[keep[i]] = res.coloring->class_of(i);
      Partition without_v = Partition::from_assignment(owner, m);
      if (auto placed = reinsert_vertex(g, without_v, v)) {
        require_valid(g, *placed, m, "pad reinsert");
        trace.add(record(depth, Mechanism::pad, g, m, "reinsert vertex " + std::to_string(v + 1)));
        return LevelResult{Verdict::yes, std::move(placed)};
      }
    }
    // G - v was not colorable or v had no admissible class.
    LevelResult fb = exact(g, m);
    trace.add(record(depth, Mechanism::fallback_exact, g, m,
                     res.verdict == Verdict::yes ? "reinsert blocked" : "G - v not colorable"));
    return fb;
  }

  static void require_valid(const Graph& g, const Partition& p, int m, const char* where) {
    VerifyResult v = verify_equitable_k_coloring(g, p, m);
    if (!v)
      throw std::logic_error(std::string("constructive solver produced an invalid coloring at ") +
                             where + ": " + v.violation->describe());
  }

  LevelResult core(const Graph& g, int m, int depth, ConstructiveTrace& trace) {
    const int n = g.order();
    std::vector<int> color(n);
    for (Vertex v = 0; v < n; ++v) color[v] = v % m;
    if (g.size() == 0) {
      Partition p = Partition::from_assignment(color, m);
      require_valid(g, p, m, "edgeless base");
      return LevelResult{Verdict::yes, std::move(p)};
    }

    // Removal order: x of minimum positive degree (lowest id), y its lowest-id neighbor.
    std::vector<std::vector<Vertex>> adj(n);
    for (Vertex v = 0; v < n; ++v) adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    std::vector<Edge> removed;
    std::vector<std::pair<Vertex, Vertex>> steps;
    removed.reserve(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      Vertex x = -1;
      for (Vertex v = 0; v < n; ++v) {
        int d = static_cast<int>(adj[v].size());
        if (d > 0 && (x < 0 || d < static_cast<int>(adj[x].size()))) x = v;
      }
      Vertex y = adj[x].front();
      steps.emplace_back(x, y);
      removed.emplace_back(x, y);
      adj[x].erase(adj[x].begin());
      adj[y].erase(std::find(adj[y].begin(), adj[y].end(), x));
    }

    const int total = static_cast<int>(steps.size());
    for (int i = total - 1; i >= 0; --i) {
      auto [x, y] = steps[i];
      LevelRecord rec = record(depth, Mechanism::trivial_merge, g, m);
      rec.x = x;
      rec.y = y;
      if (color[x] != color[y]) {
        trace.add(rec);
        continue;
      }
      check_deadline();
      Graph level(n, std::span<const Edge>(removed.data() + i, removed.size() - i));
      Partition current = Partition::from_assignment(color, m);
      SolverState state = make_state(level, current, x, y, m);
      RSet rset = build_R(state);
      rec.r = rset.size();
      rec.delta = state.delta;

      if (auto swap = chain_swap_place(state, rset)) {
        require_valid(level, swap->coloring, m, "chain swap");
        color = swap->coloring.assignment();
        rec.mechanism = Mechanism::chain_swap;
        rec.chain_length = swap->chain_length;
        trace.add(rec);
        continue;
      }

      bool repaired = false;
      if (depth < options_.max_split_depth) {
        for (const RepairTriple& tr :
             find_repair_triples(state, rset, options_.max_repair_triples)) {
          ConstructiveTrace sub_trace;
          auto sub_solver = [&](const Graph& sub, int classes) -> std::optional<Partition> {
            LevelResult r = solve(sub, classes, depth + 1, sub_trace);
            if (r.verdict == Verdict::yes) return std::move(r.coloring);
            return std::nullopt;
          };
          if (auto joined = repair_split(state, rset, tr, sub_solver)) {
            require_valid(level, *joined, m, "repair split");
            color = joined->assignment();
            trace.absorb(sub_trace);
            rec.mechanism = Mechanism::repair_split;
            rec.note = "gamma " + std::to_string(tr.gamma + 1);
            trace.add(rec);
            repaired = true;
            break;
          }
        }
      }
      if (repaired) continue;

      LevelResult fb = exact(level, m);
      rec.mechanism = Mechanism::fallback_exact;
      rec.fallbacks = 1;
      rec.note = "verdict " + to_string(fb.verdict);
      trace.add(rec);
      if (fb.verdict != Verdict::yes) return fb;  // a subgraph on the same vertices is not colorable
      color = fb.coloring->assignment();
    }
    Partition result = Partition::from_assignment(color, m);
    require_valid(g, result, m, "core result");
    return LevelResult{Verdict::yes, std::move(result)};
  }

  SolveBudget budget_;
  ConstructiveOptions options_;
  Clock::time_point start_;
  Clock::time_point deadline_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

ConstructiveResult solve_equitable(const Graph& g, int m, const FamilySpec& family,
                                   const SolveBudget& budget, const ConstructiveOptions& options) {
  if (m < 1) throw std::invalid_argument("solve_equitable: m must be at least 1");
  budget.validate();
  FamilyCheck membership = matches_family(g, family);
  if (!membership)
    throw std::invalid_argument("solve_equitable: graph violates family constraint " +
                                membership.constraint);
  ConstructiveResult result;
  ConstructiveSolver solver(budget, options);
  try {
    LevelResult res = solver.solve(g, m, 0, result.trace);
    result.outcome.verdict = res.verdict;
    result.outcome.coloring = std::move(res.coloring);
  } catch (const OutOfBudget&) {
    result.outcome.verdict = Verdict::exhausted;
    result.outcome.coloring.reset();
  }
  result.outcome.stats.nodes = solver.nodes();
  result.outcome.stats.duration = Clock::now() - solver.start();
  if (result.outcome.coloring && !verify_equitable_k_coloring(g, *result.outcome.coloring, m))
    throw std::logic_error("solve_equitable returned an invalid coloring");
  return result;
}

}  // namespace equicolor
