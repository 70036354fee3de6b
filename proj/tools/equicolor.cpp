// equicolor command-line interface.
//
// Exit codes: decide/color return 0 for yes, 1 for no, 2 when the budget ran
// out. verify returns 0 when clean, 3 on CRITICAL findings, 2 when only
// exhaustions occurred. Input and usage errors return 4.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "equicolor/bounds.hpp"
#include "equicolor/campaign.hpp"
#include "equicolor/coloring.hpp"
#include "equicolor/constructive.hpp"
#include "equicolor/edge_list_io.hpp"
#include "equicolor/exact_solver.hpp"
#include "equicolor/family.hpp"
#include "equicolor/generate.hpp"
#include "equicolor/json_io.hpp"

namespace fs = std::filesystem;
using namespace equicolor;

namespace {

constexpr int kExitUsage = 4;

struct BudgetArgs {
  std::uint64_t nodes = SolveBudget{}.node_limit;
  double secs = 60.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--budget-nodes", nodes, "Search node limit")->check(CLI::PositiveNumber);
    cmd->add_option("--budget-secs", secs, "Wall-clock limit in seconds")->check(CLI::PositiveNumber);
  }
  SolveBudget budget() const {
    SolveBudget b;
    b.node_limit = nodes;
    b.time_limit = std::chrono::milliseconds(static_cast<long long>(secs * 1000.0));
    if (b.time_limit.count() < 1) b.time_limit = std::chrono::milliseconds(1);
    return b;
  }
};

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::yes: return 0;
    case Verdict::no: return 1;
    case Verdict::exhausted: return 2;
  }
  return 2;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void print_outcome(const SolveOutcome& out, bool json) {
  if (out.coloring) {
    std::cout << (json ? coloring_to_json(*out.coloring) : to_coloring_string(*out.coloring));
  } else {
    std::cerr << "verdict: " << to_string(out.verdict) << " (" << out.stats.nodes << " nodes)\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equitable coloring solvers, bound tables and verification campaigns"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  // decide
  auto* decide = app.add_subcommand("decide", "Exact decision: equitable (or proper) k-coloring");
  int decide_k = 0;
  bool decide_proper_flag = false;
  bool decide_json = false;
  std::string decide_in;
  BudgetArgs decide_budget;
  decide->add_option("--k", decide_k, "Number of classes")->required()->check(CLI::PositiveNumber);
  decide->add_flag("--proper", decide_proper_flag, "Drop the class-size constraint");
  decide->add_option("--in", decide_in, "Edge-list file")->required();
  decide->add_flag("--json", decide_json, "Print the coloring as JSON");
  decide_budget.attach(decide);

  // color
  auto* color = app.add_subcommand("color", "Constructive equitable m-coloring with a mechanism trace");
  int color_m = 0;
  std::string color_family = "any";
  std::string color_in;
  std::string color_trace;
  bool color_json = false;
  ConstructiveOptions color_opts;
  BudgetArgs color_budget;
  color->add_option("--m", color_m, "Number of classes")->required()->check(CLI::PositiveNumber);
  color->add_option("--family", color_family, "Family the input must belong to");
  color->add_option("--in", color_in, "Edge-list file")->required();
  color->add_option("--trace", color_trace, "Write the mechanism trace JSON here");
  color->add_flag("--json", color_json, "Print the coloring as JSON");
  color->add_option("--exact-cutoff", color_opts.exact_order_cutoff,
                    "Solve orders up to this exactly (0 disables)");
  color->add_flag("--dense-shortcut", color_opts.dense_shortcut,
                  "Solve exactly when m = max degree >= n/2");
  color->add_option("--repair-triples", color_opts.max_repair_triples,
                    "Triples tried per level before falling back");
  color->add_option("--split-depth", color_opts.max_split_depth, "Nesting limit for repair splits");
  color_budget.attach(color);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate family members as edge-list files");
  GenConfig gen_cfg;
  std::string gen_family = "any";
  std::string gen_out;
  int gen_random = 0;
  bool gen_exhaustive = false;
  std::optional<int> gen_max_edges;
  gen->add_option("--n", gen_cfg.n, "Order")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--family", gen_family, "Family spec");
  auto* gen_ex = gen->add_flag("--exhaustive", gen_exhaustive, "All isomorphism classes");
  auto* gen_rand = gen->add_option("--random", gen_random, "Number of random graphs");
  gen_ex->excludes(gen_rand);
  gen->add_option("--seed", gen_cfg.seed, "Random seed");
  gen->add_flag("--connected", gen_cfg.connected, "Keep connected graphs only");
  gen->add_option("--max-edges", gen_max_edges, "Edge cap");
  gen->add_option("--out", gen_out, "Output directory")->required();

  // bounds
  auto* bounds = app.add_subcommand("bounds", "q / p lower bounds with per-r provenance");
  std::string bounds_family;
  int bounds_delta = 0, bounds_t = 3, bounds_m = 0;
  bool bounds_validate = false, bounds_r1 = false;
  std::string bounds_reading = "table";
  bounds->add_option("--family", bounds_family, "triangle-free | c4-free")->required();
  bounds->add_option("--delta", bounds_delta, "Maximum degree")->required();
  bounds->add_option("--t", bounds_t, "Class size t (>= 3)")->required();
  bounds->add_option("--m", bounds_m, "Class count")->required()->check(CLI::PositiveNumber);
  bounds->add_flag("--validate", bounds_validate, "Also run the table validation");
  bounds->add_flag("--r1-threshold", bounds_r1, "Drop the r = 1 row below its t threshold");
  bounds->add_option("--reading", bounds_reading, "table | statement")
      ->check(CLI::IsMember({"table", "statement"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification campaign from a config file");
  std::string verify_config, verify_out, verify_csv, verify_witness_dir;
  int verify_threads = 0;
  bool verify_density = false;
  std::string density_family;
  int density_min = 3, density_max = 8;
  verify->add_option("--config", verify_config, "Campaign config (key = value lines)");
  verify->add_option("--out", verify_out, "Write the JSON report here (default: stdout)");
  verify->add_option("--csv", verify_csv, "Write the CSV summary here");
  verify->add_option("--witness-dir", verify_witness_dir, "Write CRITICAL witnesses here");
  verify->add_option("--threads", verify_threads, "Worker count (overrides EQUICOLOR_THREADS)");
  verify->add_flag("--density", verify_density, "Density-bound validation instead of a campaign");
  verify->add_option("--family", density_family, "Family for --density");
  verify->add_option("--n-min", density_min, "Smallest order for --density");
  verify->add_option("--n-max", density_max, "Largest order for --density");

  // validate-tables
  auto* tables = app.add_subcommand("validate-tables", "Recompute the published threshold tables");
  int tables_lo = 3, tables_hi = 12;
  bool tables_json = false;
  tables->add_option("--t-min", tables_lo, "Smallest t");
  tables->add_option("--t-max", tables_hi, "Largest t");
  tables->add_flag("--json", tables_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*decide) {
      Graph g = read_edge_list_file(decide_in);
      SolveOutcome out = decide_proper_flag ? decide_proper(g, decide_k, decide_budget.budget())
                                            : decide_equitable(g, decide_k, decide_budget.budget());
      print_outcome(out, decide_json);
      return verdict_exit(out.verdict);
    }

    if (*color) {
      Graph g = read_edge_list_file(color_in);
      FamilySpec family = FamilySpec::parse(color_family);
      ConstructiveResult res = solve_equitable(g, color_m, family, color_budget.budget(), color_opts);
      print_outcome(res.outcome, color_json);
      if (!color_trace.empty()) write_text(color_trace, trace_to_json(res.trace));
      return verdict_exit(res.outcome.verdict);
    }

    if (*gen) {
      gen_cfg.family = FamilySpec::parse(gen_family);
      gen_cfg.max_edges = gen_max_edges;
      std::vector<Graph> graphs;
      if (gen_random > 0) {
        gen_cfg.mode = GenConfig::Mode::random;
        gen_cfg.count = gen_random;
        graphs = random_family(gen_cfg);
      } else {
        graphs = enumerate_family(gen_cfg);
      }
      fs::create_directories(gen_out);
      const std::string family_text = gen_cfg.family.normalized().to_string();
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        std::ostringstream name;
        name << "n" << gen_cfg.n << "_" << std::setw(6) << std::setfill('0') << i + 1 << ".txt";
        write_edge_list_file(fs::path(gen_out) / name.str(), graphs[i],
                             "family " + family_text + ", hash " + graphs[i].hash_hex());
      }
      std::cout << graphs.size() << " graphs written to " << gen_out << '\n';
      return 0;
    }

    if (*bounds) {
      BoundFamily family = parse_bound_family(bounds_family);
      BoundOptions opts;
      opts.r1_threshold = bounds_r1;
      opts.reading = bounds_reading == "statement" ? Reading::statement : Reading::table;
      BoundEntry entry = q_lower_bound(family, bounds_m, bounds_delta, bounds_t, opts);
      std::cout << bound_entry_to_json(entry, family, bounds_delta, bounds_t);
      if (bounds_validate) {
        TableReport report = validate_tables();
        std::cout << table_report_to_json(report);
        if (!report.all_match()) return 3;
      }
      return 0;
    }

    if (*verify) {
      const int threads = resolve_thread_count(verify_threads);
      std::string json;
      int code = 0;
      if (verify_density) {
        if (density_family.empty()) throw std::invalid_argument("--density needs --family");
        BoundValidationReport report =
            run_bound_validation(FamilySpec::parse(density_family), density_min, density_max, threads);
        json = report.to_json();
        code = report.clean() ? 0 : 3;
        if (!verify_witness_dir.empty() && !report.clean()) {
          fs::create_directories(verify_witness_dir);
          for (const auto& v : report.violations)
            write_text((fs::path(verify_witness_dir) / (v.hash + ".txt")).string(), v.witness);
        }
      } else {
        if (verify_config.empty()) throw std::invalid_argument("verify needs --config or --density");
        CampaignSpec spec = CampaignSpec::load(verify_config);
        VerificationReport report = run_conjecture_check(spec, threads);
        json = report.to_json();
        code = report.exit_code();
        if (!verify_csv.empty()) write_text(verify_csv, report.to_csv());
        if (!verify_witness_dir.empty()) {
          fs::create_directories(verify_witness_dir);
          for (const auto& r : report.records)
            if (r.critical) write_text((fs::path(verify_witness_dir) / (r.hash + ".txt")).string(), r.witness);
          for (const auto& v : report.bound_violations)
            write_text((fs::path(verify_witness_dir) / (v.hash + ".txt")).string(), v.witness);
        }
        std::cerr << "graphs " << report.counts.total() << ": yes " << report.counts.yes << ", no "
                  << report.counts.no << ", exhausted " << report.counts.exhausted
                  << ", exceptions " << report.counts.exceptions << ", critical "
                  << report.counts.critical << '\n';
      }
      if (verify_out.empty()) std::cout << json;
      else write_text(verify_out, json);
      return code;
    }

    if (*tables) {
      TableReport report = validate_tables(tables_lo, tables_hi);
      if (tables_json) {
        std::cout << table_report_to_json(report);
      } else {
        for (const ClaimCheck& c : report.checks) {
          std::cout << (c.match ? "match    " : "MISMATCH ") << c.claim << " at t=" << c.t
                    << ": expected " << c.expected << ", computed " << c.computed;
          if (!c.annotation.empty()) std::cout << "  [" << c.annotation << "]";
          std::cout << '\n';
        }
        std::cout << report.matches << " matches, " << report.mismatches << " mismatches, "
                  << report.annotated << " annotated\n";
      }
      return report.all_match() ? 0 : 3;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
