#include "equicolor/family.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "equicolor/graph_algorithms.hpp"

namespace equicolor {

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("family: bad integer for " + std::string(what) + ": '" +
                                std::string(text) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(sep, start);
    if (end == std::string_view::npos) end = text.size();
    parts.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return parts;
}

}  // namespace

FamilySpec FamilySpec::normalized() const {
  FamilySpec out = *this;
  if (out.min_girth && *out.min_girth > 3)
    for (int k = 3; k < *out.min_girth; ++k) out.forbidden_cycle_lengths.insert(k);
  int g = 3;
  while (out.forbidden_cycle_lengths.count(g)) ++g;
  if (g > 3)
    out.min_girth = g;
  else if (out.min_girth && *out.min_girth <= 3)
    out.min_girth.reset();
  return out;
}

int FamilySpec::effective_girth() const {
  int g = 3;
  FamilySpec n = normalized();
  if (n.min_girth) g = *n.min_girth;
  return g;
}

bool FamilySpec::forbids(int cycle_length) const {
  return normalized().forbidden_cycle_lengths.count(cycle_length) > 0;
}

FamilySpec FamilySpec::triangle_free_planar() {
  FamilySpec f;
  f.require_planar = true;
  f.forbidden_cycle_lengths = {3};
  return f.normalized();
}

FamilySpec FamilySpec::c4_free_planar() {
  FamilySpec f;
  f.require_planar = true;
  f.forbidden_cycle_lengths = {4};
  return f.normalized();
}

FamilySpec FamilySpec::planar_girth(int g) {
  FamilySpec f;
  f.require_planar = true;
  f.min_girth = g;
  return f.normalized();
}

std::string FamilySpec::to_string() const {
  FamilySpec n = normalized();
  std::vector<std::string> clauses;
  if (n.require_planar) clauses.emplace_back("planar");
  if (!n.forbidden_cycle_lengths.empty()) {
    std::string s = "forbid=";
    bool first = true;
    for (int k : n.forbidden_cycle_lengths) {
      if (!first) s += ':';
      s += std::to_string(k);
      first = false;
    }
    clauses.push_back(s);
  }
  if (n.max_degree_cap) clauses.push_back("maxdeg=" + std::to_string(*n.max_degree_cap));
  if (clauses.empty()) return "any";
  std::string out;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (i) out += ',';
    out += clauses[i];
  }
  return out;
}

FamilySpec FamilySpec::parse(std::string_view text) {
  FamilySpec f;
  for (std::string_view clause : split(text, ',')) {
    if (clause.empty()) continue;
    if (clause == "any") continue;
    if (clause == "planar") {
      f.require_planar = true;
    } else if (clause == "triangle-free" || clause == "c3-free") {
      f.require_planar = true;
      f.forbidden_cycle_lengths.insert(3);
    } else if (clause == "c4-free") {
      f.require_planar = true;
      f.forbidden_cycle_lengths.insert(4);
    } else if (clause.starts_with("girth>=")) {
      f.require_planar = true;
      f.min_girth = std::max(f.min_girth.value_or(3), parse_int(clause.substr(7), "girth"));
    } else if (clause.starts_with("girth=")) {
      f.min_girth = std::max(f.min_girth.value_or(3), parse_int(clause.substr(6), "girth"));
    } else if (clause.starts_with("girth") && clause.size() > 5 &&
               std::isdigit(static_cast<unsigned char>(clause[5]))) {
      f.require_planar = true;
      f.min_girth = std::max(f.min_girth.value_or(3), parse_int(clause.substr(5), "girth"));
    } else if (clause.starts_with("forbid=")) {
      for (std::string_view k : split(clause.substr(7), ':')) {
        int len = parse_int(k, "forbid");
        if (len < 3) throw std::invalid_argument("family: cycle lengths start at 3");
        f.forbidden_cycle_lengths.insert(len);
      }
    } else if (clause.starts_with("maxdeg=")) {
      int cap = parse_int(clause.substr(7), "maxdeg");
      if (cap < 0) throw std::invalid_argument("family: negative degree cap");
      f.max_degree_cap = cap;
    } else {
      throw std::invalid_argument("family: unknown clause '" + std::string(clause) + "'");
    }
  }
  return f.normalized();
}

FamilyCheck matches_family(const Graph& g, const FamilySpec& family) {
  FamilySpec f = family.normalized();
  FamilyCheck check;
  if (f.max_degree_cap) {
    for (Vertex v = 0; v < g.order(); ++v)
      if (g.degree(v) > *f.max_degree_cap) {
        check.ok = false;
        check.constraint = "maxdeg=" + std::to_string(*f.max_degree_cap);
        check.witness = {v};
        return check;
      }
  }
  for (int k : f.forbidden_cycle_lengths) {
    if (auto cycle = find_cycle_of_length(g, k)) {
      check.ok = false;
      check.constraint = "forbid C" + std::to_string(k);
      check.witness = std::move(*cycle);
      return check;
    }
  }
  if (f.require_planar && !is_planar(g)) {
    check.ok = false;
    check.constraint = "planar";
    return check;
  }
  return check;
}

}  // namespace equicolor
