#include "equicolor/json_io.hpp"

#include <stdexcept>

#include <json.hpp>

namespace equicolor {

using ordered_json = nlohmann::ordered_json;

std::string coloring_to_json(const Partition& p) {
  ordered_json classes = ordered_json::array();
  for (const auto& cls : p.classes()) {
    ordered_json members = ordered_json::array();
    for (Vertex v : cls) members.push_back(v + 1);
    classes.push_back(std::move(members));
  }
  return ordered_json{{"classes", std::move(classes)}}.dump() + "\n";
}

Partition coloring_from_json(std::string_view text, int universe) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("coloring JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("classes") || !j["classes"].is_array())
    throw std::invalid_argument("coloring JSON: expected an object with a 'classes' array");
  std::vector<std::vector<Vertex>> classes;
  for (const auto& cls : j["classes"]) {
    if (!cls.is_array()) throw std::invalid_argument("coloring JSON: class is not an array");
    std::vector<Vertex> members;
    for (const auto& v : cls) {
      if (!v.is_number_integer()) throw std::invalid_argument("coloring JSON: vertex is not an integer");
      long long id = v.get<long long>();
      if (id < 1 || id > universe) throw std::invalid_argument("coloring JSON: vertex out of range");
      members.push_back(static_cast<Vertex>(id - 1));
    }
    classes.push_back(std::move(members));
  }
  return Partition(universe, std::move(classes));
}

std::string trace_to_json(const ConstructiveTrace& trace) {
  ordered_json j;
  ordered_json totals = ordered_json::object();
  for (int i = 0; i < kMechanismCount; ++i)
    totals[to_string(static_cast<Mechanism>(i))] = trace.counts[i];
  j["mechanisms"] = std::move(totals);
  j["fallback_count"] = trace.fallback_count;
  j["levels"] = ordered_json::array();
  for (const LevelRecord& r : trace.levels) {
    ordered_json level{{"depth", r.depth},
                       {"mechanism", to_string(r.mechanism)},
                       {"order", r.order},
                       {"classes", r.classes}};
    if (r.x >= 0) level["edge"] = {r.x + 1, r.y + 1};
    if (r.r > 0) {
      level["r"] = r.r;
      level["delta"] = r.delta;
    }
    if (r.chain_length > 0) level["chain_length"] = r.chain_length;
    level["fallbacks"] = r.fallbacks;
    if (!r.note.empty()) level["note"] = r.note;
    j["levels"].push_back(std::move(level));
  }
  return j.dump(2) + "\n";
}

std::string bound_entry_to_json(const BoundEntry& e, BoundFamily family, int delta, int t) {
  ordered_json j{{"family", to_string(family)}, {"m", e.m},          {"delta", delta},
                 {"t", t},                      {"value", e.value},  {"uncapped", e.uncapped},
                 {"cap", e.cap},                {"rule", e.rule},    {"winning_r", e.winning_r},
                 {"extrapolated", e.extrapolated}};
  j["rows"] = ordered_json::array();
  for (const RowProvenance& r : e.rows)
    j["rows"].push_back({{"r", r.r},
                         {"split_bound", r.split_bound},
                         {"threshold_bound", r.threshold_bound},
                         {"condition_i", r.condition_i},
                         {"rule", r.rule},
                         {"value", r.value}});
  return j.dump(2) + "\n";
}

std::string table_report_to_json(const TableReport& report) {
  ordered_json j{{"matches", report.matches},
                 {"mismatches", report.mismatches},
                 {"annotated", report.annotated}};
  j["checks"] = ordered_json::array();
  for (const ClaimCheck& c : report.checks) {
    ordered_json check{{"claim", c.claim}, {"family", to_string(c.family)},
                       {"m", c.m},         {"delta", c.delta},
                       {"t", c.t},         {"expected", c.expected},
                       {"computed", c.computed}, {"match", c.match}};
    if (!c.annotation.empty()) check["annotation"] = c.annotation;
    j["checks"].push_back(std::move(check));
  }
  return j.dump(2) + "\n";
}

}  // namespace equicolor
