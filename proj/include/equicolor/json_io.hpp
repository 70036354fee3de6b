#pragma once

#include <string>
#include <string_view>

#include "equicolor/bounds.hpp"
#include "equicolor/coloring.hpp"
#include "equicolor/constructive.hpp"

namespace equicolor {

/// `{"classes": [[1, 3], [2, 4]]}` with 1-indexed vertices.
std::string coloring_to_json(const Partition& p);
/// Inverse of coloring_to_json. Throws std::invalid_argument on malformed input.
Partition coloring_from_json(std::string_view text, int universe);

/// Per-level mechanism, r, delta, chain length and fallback count, plus totals.
std::string trace_to_json(const ConstructiveTrace& trace);

/// Bound entry with per-r provenance rows.
std::string bound_entry_to_json(const BoundEntry& entry, BoundFamily family, int delta, int t);

std::string table_report_to_json(const TableReport& report);

}  // namespace equicolor
