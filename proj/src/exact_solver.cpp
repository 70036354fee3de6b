#include "equicolor/exact_solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "equicolor/graph_algorithms.hpp"

namespace equicolor {

void SolveBudget::validate() const {
  if (node_limit == 0) throw std::invalid_argument("budget: node limit must be positive");
  if (time_limit.count() <= 0) throw std::invalid_argument("budget: time limit must be positive");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::exhausted: return "exhausted";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetExhausted {};

class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, int k, bool equitable, const SolveBudget& budget)
      : g_(g), n_(g.order()), k_(k), equitable_(equitable), budget_(budget) {
    color_.assign(n_, kUncolored);
    size_.assign(k_, 0);
    forbid_.assign(static_cast<std::size_t>(n_) * k_, 0);
    base_ = n_ / k_;
    rem_ = n_ % k_;
    deficit_ = static_cast<long long>(base_) * k_;
    build_order();
  }

  SolveOutcome run() {
    const auto start = Clock::now();
    deadline_ = start + budget_.time_limit;
    SolveOutcome out;
    try {
      bool found = dfs(0);
      out.verdict = found ? Verdict::yes : Verdict::no;
    } catch (const BudgetExhausted&) {
      out.verdict = Verdict::exhausted;
    }
    out.stats.nodes = nodes_;
    out.stats.depth = max_depth_;
    out.stats.duration = Clock::now() - start;
    if (out.verdict == Verdict::yes) out.coloring = Partition::from_assignment(color_, k_);
    return out;
  }

 private:
  void build_order() {
    std::vector<Vertex> sl = degeneracy_order(g_);
    std::vector<int> sl_pos(n_);
    for (int i = 0; i < n_; ++i) sl_pos[sl[i]] = i;
    order_.resize(n_);
    for (int v = 0; v < n_; ++v) order_[v] = v;
    std::sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      if (g_.degree(a) != g_.degree(b)) return g_.degree(a) > g_.degree(b);
      if (sl_pos[a] != sl_pos[b]) return sl_pos[a] > sl_pos[b];
      return a < b;
    });
  }

  bool full(int c) const {
    if (!equitable_) return false;
    if (rem_ == 0) return size_[c] >= base_;
    return size_[c] > base_ || (size_[c] == base_ && big_ == rem_);
  }

  bool has_option(Vertex w) const {
    const int* row = &forbid_[static_cast<std::size_t>(w) * k_];
    for (int c = 0; c < opened_; ++c)
      if (row[c] == 0 && !full(c)) return true;
    return opened_ < k_ && !full(opened_);
  }

  // Returns false when the assignment leaves some neighbor without options
  // or the remaining vertices cannot fill every class to its floor size.
  bool assign(Vertex v, int c, int remaining_after) {
    color_[v] = c;
    if (c == opened_) ++opened_;
    if (equitable_) {
      if (size_[c] < base_) --deficit_;
      if (size_[c] == base_) ++big_;
    }
    ++size_[c];
    bool ok = true;
    for (Vertex w : g_.neighbors(v)) ++forbid_[static_cast<std::size_t>(w) * k_ + c];
    if (equitable_ && deficit_ > remaining_after) ok = false;
    if (ok)
      for (Vertex w : g_.neighbors(v))
        if (color_[w] == kUncolored && !has_option(w)) {
          ok = false;
          break;
        }
    return ok;
  }

  void unassign(Vertex v, int c, bool opened_new) {
    for (Vertex w : g_.neighbors(v)) --forbid_[static_cast<std::size_t>(w) * k_ + c];
    --size_[c];
    if (equitable_) {
      if (size_[c] < base_) ++deficit_;
      if (size_[c] == base_) --big_;
    }
    if (opened_new) --opened_;
    color_[v] = kUncolored;
  }

  void tick() {
    ++nodes_;
    if (nodes_ > budget_.node_limit) throw BudgetExhausted{};
    if ((nodes_ & 1023U) == 0 && Clock::now() > deadline_) throw BudgetExhausted{};
  }

  bool dfs(int index) {
    max_depth_ = std::max(max_depth_, index);
    if (index == n_) return true;
    const Vertex v = order_[index];
    const int limit = std::min(opened_ + 1, k_);
    const int* row = &forbid_[static_cast<std::size_t>(v) * k_];
    for (int c = 0; c < limit; ++c) {
      if (row[c] != 0 || full(c)) continue;
      tick();
      const bool opened_new = c == opened_;
      if (assign(v, c, n_ - index - 1) && dfs(index + 1)) return true;
      unassign(v, c, opened_new);
    }
    return false;
  }

  const Graph& g_;
  const int n_;
  const int k_;
  const bool equitable_;
  const SolveBudget budget_;
  Clock::time_point deadline_;

  std::vector<Vertex> order_;
  std::vector<int> color_;
  std::vector<int> size_;
  std::vector<int> forbid_;
  int opened_ = 0;
  int base_ = 0;
  int rem_ = 0;
  int big_ = 0;
  long long deficit_ = 0;
  std::uint64_t nodes_ = 0;
  int max_depth_ = 0;
};

}  // namespace

SolveOutcome decide_equitable(const Graph& g, int k, const SolveBudget& budget) {
  if (k < 1) throw std::invalid_argument("decide_equitable: k must be at least 1");
  budget.validate();
  SolveOutcome out = ColoringSearch(g, k, true, budget).run();
  if (out.coloring && !verify_equitable_k_coloring(g, *out.coloring, k))
    throw std::logic_error("decide_equitable produced an invalid coloring");
  return out;
}

SolveOutcome decide_proper(const Graph& g, int m, const SolveBudget& budget) {
  if (m < 1) throw std::invalid_argument("decide_proper: m must be at least 1");
  budget.validate();
  SolveOutcome out = ColoringSearch(g, m, false, budget).run();
  if (out.coloring && (out.coloring->class_count() != m || !is_proper(g, *out.coloring)))
    throw std::logic_error("decide_proper produced an invalid coloring");
  return out;
}

}  // namespace equicolor
