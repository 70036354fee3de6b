#include "equicolor/coloring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace equicolor {

Partition::Partition(int universe, std::vector<std::vector<Vertex>> classes,
                     std::optional<Vertex> uncolored)
    : classes_(std::move(classes)), owner_(universe, kUncolored - 1), uncolored_(uncolored) {
  // owner_ starts at a sentinel below kUncolored to detect missing vertices
  const int unset = kUncolored - 1;
  for (int c = 0; c < class_count(); ++c) {
    auto& members = classes_[c];
    std::sort(members.begin(), members.end());
    for (Vertex v : members) {
      if (v < 0 || v >= universe)
        throw std::invalid_argument("partition: vertex " + std::to_string(v) + " out of range");
      if (owner_[v] != unset)
        throw std::invalid_argument("partition: vertex " + std::to_string(v) +
                                    " appears in two classes");
      owner_[v] = c;
    }
  }
  if (uncolored_) {
    Vertex x = *uncolored_;
    if (x < 0 || x >= universe || owner_[x] != unset)
      throw std::invalid_argument("partition: bad uncolored vertex");
    owner_[x] = kUncolored;
  }
  for (Vertex v = 0; v < universe; ++v)
    if (owner_[v] == unset)
      throw std::invalid_argument("partition: vertex " + std::to_string(v) + " is not covered");
}

Partition Partition::from_assignment(std::span<const int> color_of, int k) {
  std::vector<std::vector<Vertex>> classes(k);
  std::optional<Vertex> uncolored;
  for (Vertex v = 0; v < static_cast<int>(color_of.size()); ++v) {
    int c = color_of[v];
    if (c == kUncolored) {
      if (uncolored) throw std::invalid_argument("partition: more than one uncolored vertex");
      uncolored = v;
    } else if (c < 0 || c >= k) {
      throw std::invalid_argument("partition: class index out of range");
    } else {
      classes[c].push_back(v);
    }
  }
  return Partition(static_cast<int>(color_of.size()), std::move(classes), uncolored);
}

std::vector<int> Partition::sizes() const {
  std::vector<int> out;
  out.reserve(classes_.size());
  for (const auto& c : classes_) out.push_back(static_cast<int>(c.size()));
  return out;
}

bool is_proper(const Graph& g, const Partition& p) {
  if (p.universe() != g.order())
    throw std::invalid_argument("is_proper: partition universe does not match graph order");
  if (p.uncolored())
    throw std::invalid_argument("is_proper: partition leaves a vertex uncolored");
  for (const Edge& e : g.edges())
    if (p.class_of(e.u) == p.class_of(e.v)) return false;
  return true;
}

bool is_equitable(const Partition& p) {
  if (p.class_count() == 0) return true;
  auto sizes = p.sizes();
  auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
  return *hi - *lo <= 1;
}

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::universe_mismatch: return "universe-mismatch";
    case Violation::Kind::uncolored_vertex: return "uncolored-vertex";
    case Violation::Kind::class_count: return "class-count";
    case Violation::Kind::improper_edge: return "improper-edge";
    case Violation::Kind::unbalanced: return "unbalanced";
  }
  return "unknown";
}

std::string Violation::describe() const {
  std::ostringstream out;
  out << to_string(kind) << ": ";
  switch (kind) {
    case Kind::universe_mismatch:
      out << "partition covers " << actual << " vertices, graph has " << expected;
      break;
    case Kind::uncolored_vertex:
      out << "vertex " << actual + 1 << " has no class";
      break;
    case Kind::class_count:
      out << "expected " << expected << " classes, got " << actual;
      break;
    case Kind::improper_edge:
      out << "edge " << edge->u + 1 << "-" << edge->v + 1 << " inside class " << class_a;
      break;
    case Kind::unbalanced:
      out << "class " << class_a << " has " << size_a << " vertices, class " << class_b
          << " has " << size_b;
      break;
  }
  return out.str();
}

VerifyResult verify_equitable_k_coloring(const Graph& g, const Partition& p, int k) {
  Violation v{};
  if (p.universe() != g.order()) {
    v.kind = Violation::Kind::universe_mismatch;
    v.expected = g.order();
    v.actual = p.universe();
    return {v};
  }
  if (p.uncolored()) {
    v.kind = Violation::Kind::uncolored_vertex;
    v.actual = *p.uncolored();
    return {v};
  }
  if (p.class_count() != k) {
    v.kind = Violation::Kind::class_count;
    v.expected = k;
    v.actual = p.class_count();
    return {v};
  }
  for (const Edge& e : g.edges()) {
    if (p.class_of(e.u) == p.class_of(e.v)) {
      v.kind = Violation::Kind::improper_edge;
      v.edge = e;
      v.class_a = p.class_of(e.u) + 1;
      return {v};
    }
  }
  if (k > 0) {
    auto sizes = p.sizes();
    auto lo = std::min_element(sizes.begin(), sizes.end());
    auto hi = std::max_element(sizes.begin(), sizes.end());
    if (*hi - *lo > 1) {
      v.kind = Violation::Kind::unbalanced;
      v.class_a = static_cast<int>(hi - sizes.begin()) + 1;
      v.size_a = *hi;
      v.class_b = static_cast<int>(lo - sizes.begin()) + 1;
      v.size_b = *lo;
      return {v};
    }
  }
  return {};
}

Partition apply_chain(const Partition& p, std::span<const Move> chain) {
  std::vector<int> owner = p.assignment();
  const int k = p.class_count();
  for (const Move& mv : chain) {
    if (mv.v < 0 || mv.v >= p.universe())
      throw std::invalid_argument("apply_chain: vertex out of range");
    if ((mv.from != kUncolored && (mv.from < 0 || mv.from >= k)) ||
        (mv.to != kUncolored && (mv.to < 0 || mv.to >= k)))
      throw std::invalid_argument("apply_chain: class index out of range");
    if (owner[mv.v] != mv.from)
      throw std::invalid_argument("apply_chain: vertex " + std::to_string(mv.v + 1) +
                                  " is not in its from-class");
    owner[mv.v] = mv.to;
  }
  return Partition::from_assignment(owner, k);
}

void write_coloring(std::ostream& out, const Partition& p) {
  for (int c = 0; c < p.class_count(); ++c) {
    out << c + 1 << ':';
    for (Vertex v : p.members(c)) out << ' ' << v + 1;
    out << '\n';
  }
}

std::string to_coloring_string(const Partition& p) {
  std::ostringstream out;
  write_coloring(out, p);
  return out.str();
}

Partition read_coloring(std::istream& in, int universe) {
  std::vector<std::vector<Vertex>> classes;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("coloring line " + std::to_string(line_no) + ": missing ':'");
    int index = std::stoi(line.substr(0, colon));
    if (index != static_cast<int>(classes.size()) + 1)
      throw std::invalid_argument("coloring line " + std::to_string(line_no) +
                                  ": class indices must be consecutive from 1");
    std::istringstream fields(line.substr(colon + 1));
    std::vector<Vertex> members;
    long long v = 0;
    while (fields >> v) {
      if (v < 1 || v > universe)
        throw std::invalid_argument("coloring line " + std::to_string(line_no) +
                                    ": vertex out of range");
      members.push_back(static_cast<Vertex>(v - 1));
    }
    if (!fields.eof())
      throw std::invalid_argument("coloring line " + std::to_string(line_no) + ": bad vertex");
    classes.push_back(std::move(members));
  }
  return Partition(universe, std::move(classes));
}

}  // namespace equicolor
