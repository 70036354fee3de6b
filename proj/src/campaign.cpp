#include "equicolor/campaign.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "equicolor/bounds.hpp"
#include "equicolor/edge_list_io.hpp"
#include "equicolor/generate.hpp"
#include "equicolor/graph_algorithms.hpp"

#ifndef EQUICOLOR_VERSION
#define EQUICOLOR_VERSION "0.0.0"
#endif

namespace equicolor {

using ordered_json = nlohmann::ordered_json;

std::string tool_version() { return std::string("equicolor ") + EQUICOLOR_VERSION; }

int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("EQUICOLOR_THREADS")) {
    int value = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc{} && ptr == end && value > 0) return value;
  }
  return std::max(1, omp_get_max_threads());
}

// ---------------------------------------------------------------------------
// Config text

namespace {

const char* corpus_name(CampaignSpec::Corpus c) {
  return c == CampaignSpec::Corpus::exhaustive ? "exhaustive" : "random";
}
const char* order_name(CampaignSpec::OrderPolicy p) {
  return p == CampaignSpec::OrderPolicy::all ? "all" : "multiples-of-m";
}
const char* m_name(CampaignSpec::MPolicy p) {
  return p == CampaignSpec::MPolicy::max_degree ? "max-degree" : "fixed";
}
const char* exception_name(CampaignSpec::ExceptionPolicy p) {
  return p == CampaignSpec::ExceptionPolicy::skip ? "skip" : "assert-not-colorable";
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

long long parse_int(const std::string& value, int line) {
  long long out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    throw std::invalid_argument("config line " + std::to_string(line) + ": '" + value +
                                "' is not an integer");
  return out;
}

std::uint64_t parse_u64(const std::string& value, int line) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    throw std::invalid_argument("config line " + std::to_string(line) + ": '" + value +
                                "' is not an unsigned integer");
  return out;
}

bool parse_bool(const std::string& value, int line) {
  if (value == "true" || value == "yes" || value == "1") return true;
  if (value == "false" || value == "no" || value == "0") return false;
  throw std::invalid_argument("config line " + std::to_string(line) + ": '" + value +
                              "' is not a boolean");
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value, int line) {
  throw std::invalid_argument("config line " + std::to_string(line) + ": bad value '" + value +
                              "' for " + key);
}

}  // namespace

std::string to_string(CampaignSpec::Solver s) {
  switch (s) {
    case CampaignSpec::Solver::exact: return "exact";
    case CampaignSpec::Solver::constructive: return "constructive";
    case CampaignSpec::Solver::both: return "both";
  }
  return "unknown";
}

std::string CampaignSpec::to_config() const {
  std::ostringstream out;
  out << "family = " << family.to_string() << '\n';
  out << "n_min = " << n_min << '\n';
  out << "n_max = " << n_max << '\n';
  out << "connected = " << (connected ? "true" : "false") << '\n';
  out << "corpus = " << corpus_name(corpus) << '\n';
  if (corpus == Corpus::random) {
    out << "count = " << random_count << '\n';
    out << "seed = " << seed << '\n';
  }
  if (max_edges) out << "max_edges = " << *max_edges << '\n';
  if (require_max_degree) out << "max_degree = " << *require_max_degree << '\n';
  out << "order_policy = " << order_name(order_policy) << '\n';
  out << "m_policy = " << m_name(m_policy) << '\n';
  if (m_policy == MPolicy::fixed) out << "m = " << fixed_m << '\n';
  out << "min_m = " << min_m << '\n';
  out << "solver = " << to_string(solver) << '\n';
  out << "exceptions = " << exception_name(exceptions) << '\n';
  out << "budget_nodes = " << budget.node_limit << '\n';
  out << "budget_ms = " << budget.time_limit.count() << '\n';
  out << "exact_cutoff = " << constructive.exact_order_cutoff << '\n';
  out << "dense_shortcut = " << (constructive.dense_shortcut ? "true" : "false") << '\n';
  out << "repair_triples = " << constructive.max_repair_triples << '\n';
  out << "split_depth = " << constructive.max_split_depth << '\n';
  out << "timings = " << (record_timings ? "true" : "false") << '\n';
  return out.str();
}

CampaignSpec CampaignSpec::parse_config(std::string_view text) {
  CampaignSpec spec;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string content = trim(raw);
    if (content.empty()) continue;
    auto eq = content.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(line) + ": expected key = value");
    std::string key = trim(std::string_view(content).substr(0, eq));
    std::string value = trim(std::string_view(content).substr(eq + 1));
    if (key == "family") {
      try {
        spec.family = FamilySpec::parse(value);
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("config line " + std::to_string(line) + ": " + e.what());
      }
    } else if (key == "n_min") {
      spec.n_min = static_cast<int>(parse_int(value, line));
    } else if (key == "n_max") {
      spec.n_max = static_cast<int>(parse_int(value, line));
    } else if (key == "connected") {
      spec.connected = parse_bool(value, line);
    } else if (key == "corpus") {
      if (value == "exhaustive") spec.corpus = Corpus::exhaustive;
      else if (value == "random") spec.corpus = Corpus::random;
      else bad_value(key, value, line);
    } else if (key == "count") {
      spec.random_count = static_cast<int>(parse_int(value, line));
    } else if (key == "seed") {
      spec.seed = parse_u64(value, line);
    } else if (key == "max_edges") {
      spec.max_edges = static_cast<int>(parse_int(value, line));
    } else if (key == "max_degree") {
      spec.require_max_degree = static_cast<int>(parse_int(value, line));
    } else if (key == "order_policy") {
      if (value == "all") spec.order_policy = OrderPolicy::all;
      else if (value == "multiples-of-m") spec.order_policy = OrderPolicy::multiples_of_m;
      else bad_value(key, value, line);
    } else if (key == "m_policy") {
      if (value == "max-degree") spec.m_policy = MPolicy::max_degree;
      else if (value == "fixed") spec.m_policy = MPolicy::fixed;
      else bad_value(key, value, line);
    } else if (key == "m") {
      spec.fixed_m = static_cast<int>(parse_int(value, line));
      spec.m_policy = MPolicy::fixed;
    } else if (key == "min_m") {
      spec.min_m = static_cast<int>(parse_int(value, line));
    } else if (key == "solver") {
      if (value == "exact") spec.solver = Solver::exact;
      else if (value == "constructive") spec.solver = Solver::constructive;
      else if (value == "both") spec.solver = Solver::both;
      else bad_value(key, value, line);
    } else if (key == "exceptions") {
      if (value == "skip") spec.exceptions = ExceptionPolicy::skip;
      else if (value == "assert-not-colorable") spec.exceptions = ExceptionPolicy::assert_not_colorable;
      else bad_value(key, value, line);
    } else if (key == "budget_nodes") {
      spec.budget.node_limit = parse_u64(value, line);
    } else if (key == "budget_ms") {
      spec.budget.time_limit = std::chrono::milliseconds(parse_int(value, line));
    } else if (key == "budget_secs") {
      spec.budget.time_limit = std::chrono::milliseconds(parse_int(value, line) * 1000);
    } else if (key == "exact_cutoff") {
      spec.constructive.exact_order_cutoff = static_cast<int>(parse_int(value, line));
    } else if (key == "dense_shortcut") {
      spec.constructive.dense_shortcut = parse_bool(value, line);
    } else if (key == "repair_triples") {
      spec.constructive.max_repair_triples = static_cast<int>(parse_int(value, line));
    } else if (key == "split_depth") {
      spec.constructive.max_split_depth = static_cast<int>(parse_int(value, line));
    } else if (key == "timings") {
      spec.record_timings = parse_bool(value, line);
    } else {
      throw std::invalid_argument("config line " + std::to_string(line) + ": unknown key '" +
                                  key + "'");
    }
  }
  if (spec.n_min < 0 || spec.n_max < spec.n_min)
    throw std::invalid_argument("config: need 0 <= n_min <= n_max");
  if (spec.m_policy == MPolicy::fixed && spec.fixed_m < 1)
    throw std::invalid_argument("config: fixed m must be at least 1");
  spec.budget.validate();
  return spec;
}

CampaignSpec CampaignSpec::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

int CampaignSpec::m_for(const Graph& g) const {
  return m_policy == MPolicy::fixed ? fixed_m : g.max_degree();
}

// ---------------------------------------------------------------------------
// Corpus

std::vector<Graph> build_corpus(const CampaignSpec& spec) {
  std::vector<Graph> corpus;
  for (int n = spec.n_min; n <= spec.n_max; ++n) {
    GenConfig cfg;
    cfg.n = n;
    cfg.family = spec.family;
    cfg.connected = spec.connected;
    cfg.max_edges = spec.max_edges;
    std::vector<Graph> graphs;
    if (spec.corpus == CampaignSpec::Corpus::exhaustive) {
      graphs = enumerate_family(cfg);
    } else {
      cfg.mode = GenConfig::Mode::random;
      cfg.count = spec.random_count;
      cfg.seed = derive_seed(spec.seed, static_cast<std::uint64_t>(n));
      graphs = random_family(cfg);
    }
    for (Graph& g : graphs) {
      if (spec.require_max_degree && g.max_degree() != *spec.require_max_degree) continue;
      const int m = spec.m_for(g);
      if (m < spec.min_m) continue;
      if (spec.order_policy == CampaignSpec::OrderPolicy::multiples_of_m && g.order() % m != 0)
        continue;
      corpus.push_back(std::move(g));
    }
  }
  return corpus;
}

// ---------------------------------------------------------------------------
// Per-graph check

GraphRecord check_graph(const CampaignSpec& spec, const Graph& g) {
  const auto start = std::chrono::steady_clock::now();
  GraphRecord rec;
  rec.hash = g.hash_hex();
  rec.n = g.order();
  rec.edges = static_cast<int>(g.size());
  rec.delta = g.max_degree();
  rec.m = spec.m_for(g);
  auto mark_critical = [&](std::string reason) {
    rec.critical = true;
    rec.critical_reason = std::move(reason);
    rec.witness = to_edge_list_string(g, "critical witness " + rec.hash);
  };

  ExceptionCheck exc;
  if (rec.m == rec.delta && is_connected(g)) exc = is_exception(g, rec.m);

  if (exc) {
    rec.exception_kind = to_string(exc.kind);
    if (spec.exceptions == CampaignSpec::ExceptionPolicy::skip) {
      rec.verdict = "exception-skipped";
    } else {
      SolveOutcome out = decide_equitable(g, rec.m, spec.budget);
      rec.exact = out.verdict;
      if (out.verdict == Verdict::no) {
        rec.verdict = "exception-confirmed";
      } else if (out.verdict == Verdict::exhausted) {
        rec.verdict = "exhausted";
      } else {
        rec.verdict = "exception-colorable";
        mark_critical("exception graph is equitably colorable");
      }
    }
  } else {
    std::optional<SolveOutcome> exact_out;
    std::optional<ConstructiveResult> cons_out;
    if (spec.solver != CampaignSpec::Solver::constructive) {
      exact_out = decide_equitable(g, rec.m, spec.budget);
      rec.exact = exact_out->verdict;
    }
    if (spec.solver != CampaignSpec::Solver::exact) {
      cons_out = solve_equitable(g, rec.m, spec.family, spec.budget, spec.constructive);
      rec.constructive = cons_out->outcome.verdict;
      rec.mechanisms = cons_out->trace.counts;
      rec.fallbacks = cons_out->trace.fallback_count;
    }
    auto decisive = [](const std::optional<Verdict>& v) { return v && *v != Verdict::exhausted; };
    Verdict verdict = Verdict::exhausted;
    if (decisive(rec.exact)) verdict = *rec.exact;
    else if (decisive(rec.constructive)) verdict = *rec.constructive;
    rec.verdict = to_string(verdict);
    if (decisive(rec.exact) && decisive(rec.constructive) && *rec.exact != *rec.constructive)
      mark_critical("solvers disagree: exact " + to_string(*rec.exact) + ", constructive " +
                    to_string(*rec.constructive));
    else if (verdict == Verdict::no)
      mark_critical("not equitably " + std::to_string(rec.m) + "-colorable");
    for (const SolveOutcome* out : {exact_out ? &*exact_out : nullptr,
                                    cons_out ? &cons_out->outcome : nullptr}) {
      if (out && out->coloring && !verify_equitable_k_coloring(g, *out->coloring, rec.m))
        mark_critical("solver returned an invalid coloring");
    }
  }
  if (spec.record_timings)
    rec.duration_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start).count();
  return rec;
}

namespace {

std::optional<BoundViolation> density_violation(const FamilySpec& family, const Graph& g) {
  if (g.order() < 3) return std::nullopt;
  auto bound = density_bound(family, g.order());
  if (bound && static_cast<long long>(g.size()) > *bound)
    return BoundViolation{g.hash_hex(), g.order(), static_cast<long long>(g.size()), *bound,
                          "edges", to_edge_list_string(g, "density violation")};
  auto cap = delta_cap(family, g.order());
  if (cap && g.min_degree() > *cap)
    return BoundViolation{g.hash_hex(), g.order(), g.min_degree(), *cap, "min-degree",
                          to_edge_list_string(g, "minimum degree violation")};
  return std::nullopt;
}

VerificationReport assemble(const CampaignSpec& spec, const std::vector<Graph>& corpus,
                            std::vector<GraphRecord> records) {
  VerificationReport report;
  report.tool = tool_version();
  report.config = spec.to_config();
  for (const GraphRecord& r : records) {
    if (r.verdict == "yes") ++report.counts.yes;
    else if (r.verdict == "no") ++report.counts.no;
    else if (r.verdict == "exhausted") ++report.counts.exhausted;
    else ++report.counts.exceptions;
    if (r.critical) ++report.counts.critical;
    for (int i = 0; i < kMechanismCount; ++i) report.mechanisms[i] += r.mechanisms[i];
  }
  for (const Graph& g : corpus)
    if (auto v = density_violation(spec.family, g)) report.bound_violations.push_back(*v);
  report.records = std::move(records);
  return report;
}

}  // namespace

VerificationReport run_conjecture_check(const CampaignSpec& spec, int threads) {
  return run_conjecture_check(spec, build_corpus(spec), threads);
}

VerificationReport run_conjecture_check(const CampaignSpec& spec, const std::vector<Graph>& corpus,
                                        int threads) {
  std::vector<GraphRecord> records(corpus.size());
  const long long count = static_cast<long long>(corpus.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_thread_count(threads))
  for (long long i = 0; i < count; ++i) {
    try {
      records[static_cast<std::size_t>(i)] = check_graph(spec, corpus[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(equicolor_campaign_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return assemble(spec, corpus, std::move(records));
}

VerificationReport run_conjecture_check_serial(const CampaignSpec& spec,
                                               const std::vector<Graph>& corpus) {
  std::vector<GraphRecord> records;
  records.reserve(corpus.size());
  for (const Graph& g : corpus) records.push_back(check_graph(spec, g));
  return assemble(spec, corpus, std::move(records));
}

int VerificationReport::exit_code() const {
  if (counts.critical > 0 || !bound_violations.empty()) return 3;
  if (counts.exhausted > 0) return 2;
  return 0;
}

namespace {

ordered_json mechanisms_json(const std::array<int, kMechanismCount>& counts) {
  ordered_json j = ordered_json::object();
  for (int i = 0; i < kMechanismCount; ++i) j[to_string(static_cast<Mechanism>(i))] = counts[i];
  return j;
}

ordered_json violation_json(const BoundViolation& v) {
  return ordered_json{{"hash", v.hash},   {"n", v.n},         {"value", v.edges},
                      {"bound", v.bound}, {"kind", v.kind},   {"witness", v.witness}};
}

}  // namespace

std::string VerificationReport::to_json() const {
  ordered_json j;
  j["schema"] = schema;
  j["tool"] = tool;
  j["config"] = config;
  j["counts"] = {{"total", counts.total()}, {"yes", counts.yes},
                 {"no", counts.no},         {"exhausted", counts.exhausted},
                 {"exceptions", counts.exceptions}, {"critical", counts.critical}};
  j["mechanisms"] = mechanisms_json(mechanisms);
  j["bound_violations"] = ordered_json::array();
  for (const auto& v : bound_violations) j["bound_violations"].push_back(violation_json(v));
  j["critical"] = ordered_json::array();
  j["records"] = ordered_json::array();
  for (const GraphRecord& r : records) {
    ordered_json rec;
    rec["hash"] = r.hash;
    rec["n"] = r.n;
    rec["edges"] = r.edges;
    rec["delta"] = r.delta;
    rec["m"] = r.m;
    rec["verdict"] = r.verdict;
    if (r.exact) rec["exact"] = to_string(*r.exact);
    if (r.constructive) {
      rec["constructive"] = to_string(*r.constructive);
      rec["mechanisms"] = mechanisms_json(r.mechanisms);
      rec["fallbacks"] = r.fallbacks;
    }
    if (!r.exception_kind.empty()) rec["exception"] = r.exception_kind;
    if (r.duration_ms) rec["duration_ms"] = *r.duration_ms;
    if (r.critical) {
      rec["critical"] = r.critical_reason;
      j["critical"].push_back({{"hash", r.hash}, {"reason", r.critical_reason},
                               {"witness", r.witness}});
    }
    j["records"].push_back(std::move(rec));
  }
  return j.dump(2) + "\n";
}

std::string VerificationReport::to_csv() const {
  std::ostringstream out;
  out << "hash,n,edges,delta,m,verdict,exact,constructive";
  for (int i = 0; i < kMechanismCount; ++i) out << ',' << to_string(static_cast<Mechanism>(i));
  out << ",critical\n";
  for (const GraphRecord& r : records) {
    out << r.hash << ',' << r.n << ',' << r.edges << ',' << r.delta << ',' << r.m << ','
        << r.verdict << ',' << (r.exact ? to_string(*r.exact) : "") << ','
        << (r.constructive ? to_string(*r.constructive) : "");
    for (int c : r.mechanisms) out << ',' << c;
    out << ',' << (r.critical ? "CRITICAL" : "") << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Density validation

namespace {

DensityRow density_row(const FamilySpec& family, int n, std::vector<BoundViolation>& violations) {
  DensityRow row;
  row.n = n;
  row.bound = density_bound(family, n);
  row.delta_cap = delta_cap(family, n);
  GenConfig cfg;
  cfg.n = n;
  cfg.family = family;
  bool first = true;
  for_each_family_graph(cfg, [&](const Graph& g) {
    ++row.graphs;
    const long long e = static_cast<long long>(g.size());
    if (first || e > row.max_edges) {
      row.max_edges = e;
      row.extremal_hash = g.hash_hex();
      row.extremal_witness = to_edge_list_string(g, "extremal graph");
      first = false;
    }
    row.max_min_degree = std::max(row.max_min_degree, g.min_degree());
    if (auto v = density_violation(family, g)) violations.push_back(*v);
  });
  return row;
}

BoundValidationReport make_bound_report(const FamilySpec& family) {
  BoundValidationReport report;
  report.tool = tool_version();
  report.family = family.normalized().to_string();
  return report;
}

void check_range(int n_min, int n_max) {
  if (n_min < 3 || n_max < n_min)
    throw std::invalid_argument("bound validation: need 3 <= n_min <= n_max");
}

}  // namespace

BoundValidationReport run_bound_validation(const FamilySpec& family, int n_min, int n_max,
                                           int threads) {
  check_range(n_min, n_max);
  BoundValidationReport report = make_bound_report(family);
  const int count = n_max - n_min + 1;
  std::vector<DensityRow> rows(static_cast<std::size_t>(count));
  std::vector<std::vector<BoundViolation>> found(static_cast<std::size_t>(count));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_thread_count(threads))
  for (int i = count - 1; i >= 0; --i) {
    try {
      rows[static_cast<std::size_t>(i)] = density_row(family, n_min + i, found[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(equicolor_bounds_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  report.rows = std::move(rows);
  for (auto& v : found) report.violations.insert(report.violations.end(), v.begin(), v.end());
  return report;
}

BoundValidationReport run_bound_validation_serial(const FamilySpec& family, int n_min, int n_max) {
  check_range(n_min, n_max);
  BoundValidationReport report = make_bound_report(family);
  for (int n = n_min; n <= n_max; ++n) report.rows.push_back(density_row(family, n, report.violations));
  return report;
}

std::string BoundValidationReport::to_json() const {
  ordered_json j;
  j["schema"] = schema;
  j["tool"] = tool;
  j["family"] = family;
  j["rows"] = ordered_json::array();
  for (const DensityRow& r : rows) {
    ordered_json row{{"n", r.n}, {"graphs", r.graphs}, {"max_edges", r.max_edges}};
    row["bound"] = r.bound ? ordered_json(*r.bound) : ordered_json("none");
    row["max_min_degree"] = r.max_min_degree;
    row["delta_cap"] = r.delta_cap ? ordered_json(*r.delta_cap) : ordered_json("none");
    row["extremal_hash"] = r.extremal_hash;
    row["extremal_witness"] = r.extremal_witness;
    j["rows"].push_back(std::move(row));
  }
  j["violations"] = ordered_json::array();
  for (const auto& v : violations) j["violations"].push_back(violation_json(v));
  return j.dump(2) + "\n";
}

}  // namespace equicolor
