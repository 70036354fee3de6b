#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "equicolor/coloring.hpp"
#include "equicolor/graph.hpp"

namespace equicolor {

/// Search limits for one solve. Both must be positive.
struct SolveBudget {
  std::uint64_t node_limit = 10'000'000;
  std::chrono::milliseconds time_limit{60'000};

  void validate() const;
};

enum class Verdict { yes, no, exhausted };

std::string to_string(Verdict v);

struct SolveStats {
  std::uint64_t nodes = 0;
  int depth = 0;
  std::chrono::nanoseconds duration{0};
};

/// Result of a decision procedure. `coloring` is set exactly when the
/// verdict is yes.
struct SolveOutcome {
  Verdict verdict = Verdict::exhausted;
  std::optional<Partition> coloring;
  SolveStats stats;
};

/// Does g admit an equitable k-coloring?
///
/// Backtracking over a static vertex order (descending degree, later
/// smallest-last position first on ties) with forward checking. Class
/// capacities are fixed up front: n mod k classes of size ceil(n/k), the rest
/// floor(n/k). Empty classes are interchangeable, so a vertex opens at most
/// one new class. Every yes payload is re-verified before returning.
/// Throws std::invalid_argument for k < 1.
SolveOutcome decide_equitable(const Graph& g, int k, const SolveBudget& budget = {});

/// Does g admit a proper m-coloring (no size constraints)? The yes payload
/// has exactly m classes, some possibly empty. Throws for m < 1.
SolveOutcome decide_proper(const Graph& g, int m, const SolveBudget& budget = {});

}  // namespace equicolor
