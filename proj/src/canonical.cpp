#include "equicolor/canonical.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace equicolor {

namespace {

using Mask = std::uint32_t;
using Cells = std::vector<std::vector<Vertex>>;

// Bit position of pair (i, j), i < j, in row-major upper-triangle order;
// position 0 is the most significant bit of the key.
void set_pair(CanonicalKey& key, int n, int i, int j) {
  int index = i * n - i * (i + 1) / 2 + (j - i - 1);
  int word = index / 64;
  int bit = 63 - index % 64;
  key.bits[static_cast<std::size_t>(word)] |= std::uint64_t{1} << bit;
}

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(g.order()), adj_(g.order(), 0) {
    for (const Edge& e : g.edges()) {
      adj_[e.u] |= Mask{1} << e.v;
      adj_[e.v] |= Mask{1} << e.u;
    }
  }

  CanonicalForm run() {
    Cells start;
    if (n_ > 0) {
      start.emplace_back();
      for (Vertex v = 0; v < n_; ++v) start.back().push_back(v);
    }
    search(std::move(start));
    CanonicalForm out;
    out.key = best_;
    out.labeling = best_labeling_;
    if (n_ == 0) out.key.n = 0;
    return out;
  }

 private:
  int count_in(Vertex v, Mask set) const { return std::popcount(adj_[v] & set); }

  // Splits cells until every cell is equitable with respect to every other.
  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
        Mask splitter = 0;
        for (Vertex v : cells[s]) splitter |= Mask{1} << v;
        for (std::size_t c = 0; c < cells.size(); ++c) {
          auto& cell = cells[c];
          if (cell.size() < 2) continue;
          std::vector<std::pair<int, Vertex>> keyed;
          keyed.reserve(cell.size());
          for (Vertex v : cell) keyed.emplace_back(count_in(v, splitter), v);
          std::stable_sort(keyed.begin(), keyed.end(),
                           [](auto& a, auto& b) { return a.first < b.first; });
          if (keyed.front().first == keyed.back().first) continue;
          Cells pieces;
          for (std::size_t i = 0; i < keyed.size(); ++i) {
            if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
            pieces.back().push_back(keyed[i].second);
          }
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
          changed = true;
          break;
        }
      }
    }
  }

  bool twins(Vertex a, Vertex b) const {
    Mask ma = adj_[a] & ~(Mask{1} << b);
    Mask mb = adj_[b] & ~(Mask{1} << a);
    return ma == mb;
  }

  void leaf(const Cells& cells) {
    std::vector<Vertex> label(n_);
    for (std::size_t i = 0; i < cells.size(); ++i) label[cells[i][0]] = static_cast<Vertex>(i);
    std::vector<Vertex> at(n_);
    for (Vertex v = 0; v < n_; ++v) at[label[v]] = v;
    CanonicalKey key;
    key.n = n_;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (adj_[at[i]] >> at[j] & 1U) set_pair(key, n_, i, j);
    if (!have_best_ || key > best_) {
      best_ = key;
      best_labeling_ = std::move(label);
      have_best_ = true;
    }
  }

  void search(Cells cells) {
    refine(cells);
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1) {
        target = i;
        break;
      }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    std::vector<Vertex> tried;
    for (Vertex v : cells[target]) {
      bool redundant = false;
      for (Vertex u : tried)
        if (twins(u, v)) {
          redundant = true;
          break;
        }
      if (redundant) continue;
      tried.push_back(v);
      Cells next = cells;
      std::vector<Vertex> rest;
      for (Vertex w : cells[target])
        if (w != v) rest.push_back(w);
      next[target] = {v};
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(target) + 1, rest);
      search(std::move(next));
    }
  }

  int n_;
  std::vector<Mask> adj_;
  CanonicalKey best_;
  std::vector<Vertex> best_labeling_;
  bool have_best_ = false;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder)
    throw std::invalid_argument("canonical_form: order above " +
                                std::to_string(kMaxCanonicalOrder));
  return Canonizer(g).run();
}

Graph canonical_graph(const Graph& g) {
  CanonicalForm form = canonical_form(g);
  return g.relabeled(form.labeling);
}

CanonicalKey packed_key(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder)
    throw std::invalid_argument("packed_key: order above " + std::to_string(kMaxCanonicalOrder));
  CanonicalKey key;
  key.n = g.order();
  for (const Edge& e : g.edges()) set_pair(key, g.order(), e.u, e.v);
  return key;
}

}  // namespace equicolor
