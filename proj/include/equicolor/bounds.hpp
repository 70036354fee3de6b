#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "equicolor/family.hpp"

namespace equicolor {

// ---------------------------------------------------------------------------
// Density bounds

/// Largest possible edge count of a family member of order n, or nullopt
/// when the family has no known formula (non-planar families).
///
/// Planar graphs of girth at least g: max(n-1, floor(g(n-2)/(g-2))), where
/// the n-1 term covers forests. Planar graphs without C4 (n >= 4):
/// floor((15n-30)/7). A degree cap D adds floor(nD/2). When several formulas
/// apply, the smallest wins. Throws std::invalid_argument for n < 3.
std::optional<long long> density_bound(const FamilySpec& family, int n);

/// Largest possible minimum degree for a family member of order n: the
/// handshake bound floor(2 density_bound(n) / n), tightened by the
/// order-free constants of the planar families (5 for planar, 4 without C4,
/// ceil(2g/(g-2)) - 1 for girth g). nullopt when there is no density bound.
std::optional<int> delta_cap(const FamilySpec& family, int n);

// ---------------------------------------------------------------------------
// q / p lower-bound recurrences

/// The two parameterizations of the size thresholds: q for triangle-free
/// planar graphs, p for planar graphs without C4.
enum class BoundFamily { triangle_free, c4_free };

std::string to_string(BoundFamily f);
/// Accepts "triangle-free" / "tf" / "q" and "c4-free" / "c4" / "p".
BoundFamily parse_bound_family(std::string_view text);

/// Size cap for order mt: 2mt-4, or floor((15/7)mt - 30/7).
long long density_cap(BoundFamily family, int m, int t);

/// Largest r considered in the per-r rows (the family's minimum-degree cap).
int max_row_r(BoundFamily family);

/// Closed-form small cases: q_1 = 0, q_2 = 3, q_3 = 2t; p_1 = 0, p_2 = 2,
/// p_3 = 6, p_4 = 3t. Throws std::invalid_argument outside m in 1..3 (q)
/// or 1..4 (p), or for t < 1.
long long base_q(BoundFamily family, int m, int t);

/// How the m = 5 level is evaluated. `table` uses the generic per-r rows;
/// `statement` uses the closed min-expressions in their published form.
enum class Reading { table, statement };

struct BoundOptions {
  /// Drop the r = 1 row when t is below r1_t_threshold(m, delta): the
  /// neighbor y of x cannot absorb (m-1)t edges from B' for such t.
  bool r1_threshold = false;
  Reading reading = Reading::table;
};

/// One per-r row in the provenance of a bound.
struct RowProvenance {
  int r = 0;
  long long split_bound = 0;       // e(G) >= r(m-r)t + Q(r) + Q(m-r) - delta + 4
  long long threshold_bound = 0;   // e(G) >= (r+1)(m-r)t - t + 2 + Q(r) + 1
  bool condition_i = false;        // threshold row does not apply
  bool skipped = false;            // removed by the r = 1 threshold
  long long value = 0;             // largest size still forced colorable by this row
  std::string rule;                // "split", "threshold", "skipped"
};

struct BoundEntry {
  int m = 0;
  long long value = 0;      // min(cap, uncapped)
  long long uncapped = 0;   // min over rows (or the base value)
  long long cap = 0;
  bool base = false;
  bool capped = false;
  int winning_r = 0;        // 0 for base entries or when the cap wins
  bool extrapolated = false;
  std::string rule;
  std::vector<RowProvenance> rows;
};

/// Bound values Q(1..max_m) for one family, delta and t, built bottom-up.
class BoundTable {
 public:
  BoundTable(BoundFamily family, int delta, int t, int max_m, BoundOptions options = {});

  BoundFamily family() const { return family_; }
  int delta() const { return delta_; }
  int t() const { return t_; }
  int max_m() const { return static_cast<int>(entries_.size()) - 1; }
  const BoundOptions& options() const { return options_; }

  bool has(int m) const { return m >= 1 && m <= max_m(); }
  /// Throws std::out_of_range for missing entries.
  const BoundEntry& entry(int m) const;
  long long value(int m) const { return entry(m).value; }

 private:
  BoundFamily family_;
  int delta_;
  int t_;
  BoundOptions options_;
  std::vector<BoundEntry> entries_;  // index m; entries_[0] unused
};

/// Size lower bound (>= form) for an edge-minimal counterexample of order mt
/// whose R-set has r classes: the split bound alone when condition (i)
/// 2((m-r)t + 1) > (t-1)(k + delta) holds (k = 1 triangle-free, 2 without
/// C4), else the smaller of the split bound and the threshold bound.
/// Throws std::invalid_argument when r is out of 1..m-1 or Q lacks r / m-r.
long long row_bound(int m, int r, int delta, int t, const BoundTable& Q);

/// Computes Q(m) with provenance (see BoundTable). Throws for t < 3 or m < 1.
BoundEntry q_lower_bound(BoundFamily family, int m, int delta, int t, BoundOptions options = {});

/// Smallest t with (t-1)delta - 1 >= (m-1)t; nullopt ("unbounded") when
/// delta <= m-1. Throws std::invalid_argument for m < 2.
std::optional<int> r1_t_threshold(int m, int delta);

/// True when (family, m, delta) lies outside the parameter ranges the
/// recurrences were developed for.
bool is_extrapolated(BoundFamily family, int m, int delta);

// ---------------------------------------------------------------------------
// Table validation

struct ClaimCheck {
  std::string claim;       // human-readable claim
  BoundFamily family = BoundFamily::triangle_free;
  int m = 0;
  int delta = 0;
  int t = 0;
  long long expected = 0;
  long long computed = 0;
  bool match = false;
  std::string annotation;  // reading discrepancies and other notes
};

struct TableReport {
  std::vector<ClaimCheck> checks;
  int matches = 0;
  int mismatches = 0;
  int annotated = 0;

  bool all_match() const { return mismatches == 0; }
};

/// Recomputes the published threshold claims and the closing inequalities of
/// the m = 6, 7 (triangle-free), m = 7, 8 (without C4) and girth-6 arguments
/// for every t in [t_lo, t_hi].
TableReport validate_tables(int t_lo = 3, int t_hi = 12);

}  // namespace equicolor
