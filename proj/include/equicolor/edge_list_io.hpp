#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "equicolor/graph.hpp"

namespace equicolor {

/// Raised for malformed edge-list input; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Reads the DIMACS-flavoured edge-list format:
///
///     c optional comment
///     p <n> <m>
///     e <u> <v>        (m lines, 1-indexed endpoints)
///
/// Blank lines and `c` lines are ignored anywhere. The header must come first
/// and the number of `e` lines must equal m. Self-loops, duplicate edges and
/// out-of-range endpoints are errors.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const Graph& g, const std::string& comment = {});
std::string to_edge_list_string(const Graph& g, const std::string& comment = {});
void write_edge_list_file(const std::filesystem::path& path, const Graph& g,
                          const std::string& comment = {});

}  // namespace equicolor
