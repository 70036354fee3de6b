#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "equicolor/constructive.hpp"
#include "equicolor/exact_solver.hpp"
#include "equicolor/family.hpp"
#include "equicolor/graph.hpp"

namespace equicolor {

std::string tool_version();

/// Worker count: EQUICOLOR_THREADS when set to a positive integer, else the
/// OpenMP default. An explicit positive `requested` wins over both.
int resolve_thread_count(int requested = 0);

/// Everything needed to reproduce a verification campaign.
struct CampaignSpec {
  enum class Corpus { exhaustive, random };
  enum class OrderPolicy { all, multiples_of_m };
  enum class MPolicy { max_degree, fixed };
  enum class Solver { exact, constructive, both };
  enum class ExceptionPolicy { skip, assert_not_colorable };

  FamilySpec family;
  int n_min = 1;
  int n_max = 8;
  bool connected = true;
  Corpus corpus = Corpus::exhaustive;
  int random_count = 100;      // per order, random corpora only
  std::uint64_t seed = 1;
  std::optional<int> max_edges;
  /// Keep only graphs whose maximum degree equals this value.
  std::optional<int> require_max_degree;

  OrderPolicy order_policy = OrderPolicy::all;
  MPolicy m_policy = MPolicy::max_degree;
  int fixed_m = 0;
  /// Graphs whose class count would fall below this are left out.
  int min_m = 2;

  Solver solver = Solver::exact;
  ExceptionPolicy exceptions = ExceptionPolicy::skip;
  SolveBudget budget;
  ConstructiveOptions constructive;
  /// Include per-graph wall-clock durations (reports stop being byte-stable).
  bool record_timings = false;

  /// Key = value text, one setting per line; '#' starts a comment.
  std::string to_config() const;
  /// Inverse of to_config(); unknown keys and bad values throw
  /// std::invalid_argument naming the line.
  static CampaignSpec parse_config(std::string_view text);
  static CampaignSpec load(const std::string& path);

  /// Class count for g under the m policy.
  int m_for(const Graph& g) const;
};

std::string to_string(CampaignSpec::Solver s);

/// Corpus of the campaign in deterministic order (order by order, then
/// canonical key or draw index), after all filters.
std::vector<Graph> build_corpus(const CampaignSpec& spec);

struct GraphRecord {
  std::string hash;
  int n = 0;
  int edges = 0;
  int delta = 0;
  int m = 0;
  /// yes | no | exhausted | exception-skipped | exception-confirmed | exception-colorable
  std::string verdict;
  std::optional<Verdict> exact;
  std::optional<Verdict> constructive;
  std::string exception_kind;  // empty for non-exceptions
  std::array<int, kMechanismCount> mechanisms{};
  int fallbacks = 0;
  std::optional<double> duration_ms;
  bool critical = false;
  std::string critical_reason;
  std::string witness;  // edge list of the graph for critical entries
};

struct ReportCounts {
  int yes = 0;
  int no = 0;
  int exhausted = 0;
  int exceptions = 0;
  int critical = 0;
  int total() const { return yes + no + exhausted + exceptions; }
};

struct BoundViolation {
  std::string hash;
  int n = 0;
  long long edges = 0;
  long long bound = 0;
  std::string kind;  // "edges" or "min-degree"
  std::string witness;
};

struct VerificationReport {
  int schema = 1;
  std::string tool;
  std::string config;
  std::vector<GraphRecord> records;
  ReportCounts counts;
  std::array<int, kMechanismCount> mechanisms{};
  std::vector<BoundViolation> bound_violations;

  /// 0 clean, 3 when CRITICAL findings exist, 2 when only exhaustions.
  int exit_code() const;
  std::string to_json() const;
  std::string to_csv() const;
};

/// Solves every corpus graph (in parallel across graphs) and assembles the
/// report in corpus order.
VerificationReport run_conjecture_check(const CampaignSpec& spec, int threads = 0);
VerificationReport run_conjecture_check(const CampaignSpec& spec, const std::vector<Graph>& corpus,
                                        int threads = 0);

/// Single-threaded reference with identical output.
VerificationReport run_conjecture_check_serial(const CampaignSpec& spec,
                                               const std::vector<Graph>& corpus);

/// The per-graph step shared by both drivers.
GraphRecord check_graph(const CampaignSpec& spec, const Graph& g);

struct DensityRow {
  int n = 0;
  int graphs = 0;
  long long max_edges = 0;
  std::optional<long long> bound;
  int max_min_degree = 0;
  std::optional<int> delta_cap;
  std::string extremal_hash;
  std::string extremal_witness;
};

struct BoundValidationReport {
  int schema = 1;
  std::string tool;
  std::string family;
  std::vector<DensityRow> rows;
  std::vector<BoundViolation> violations;

  bool clean() const { return violations.empty(); }
  std::string to_json() const;
};

/// Checks e(G) <= density_bound and min degree <= delta_cap over the
/// exhaustive family corpus (not restricted to connected graphs) for every
/// order in [n_min, n_max], n >= 3. Orders are processed in parallel.
BoundValidationReport run_bound_validation(const FamilySpec& family, int n_min, int n_max,
                                           int threads = 0);
BoundValidationReport run_bound_validation_serial(const FamilySpec& family, int n_min, int n_max);

}  // namespace equicolor
