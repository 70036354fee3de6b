#include "equicolor/edge_list_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace equicolor {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long long read_number(std::istringstream& fields, int line, const char* what) {
  long long value = 0;
  if (!(fields >> value)) throw ParseError(line, std::string("expected integer ") + what);
  return value;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      // tolerate the classic "p edge n m" spelling
      std::string next;
      std::streampos pos = fields.tellg();
      fields >> next;
      if (next != "edge" && next != "edges") {
        fields.clear();
        fields.seekg(pos);
      }
      n = read_number(fields, line_no, "vertex count");
      m = read_number(fields, line_no, "edge count");
      if (n < 0 || m < 0) throw ParseError(line_no, "negative header value");
      if (m > n * (n - 1) / 2) throw ParseError(line_no, "more edges than a simple graph allows");
      have_header = true;
      edges.reserve(static_cast<std::size_t>(m));
    } else if (tag == "e") {
      if (!have_header) throw ParseError(line_no, "edge before header");
      long long u = read_number(fields, line_no, "endpoint");
      long long v = read_number(fields, line_no, "endpoint");
      if (u < 1 || u > n || v < 1 || v > n) throw ParseError(line_no, "endpoint out of range");
      if (u == v) throw ParseError(line_no, "self-loop");
      if (static_cast<long long>(edges.size()) >= m)
        throw ParseError(line_no, "more edge lines than the header declares");
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      throw ParseError(line_no, "unknown line tag '" + tag + "'");
    }
    std::string extra;
    if (fields >> extra) throw ParseError(line_no, "trailing content '" + extra + "'");
  }
  if (!have_header) throw ParseError(line_no, "missing 'p' header");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(line_no, "header declares " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  try {
    return Graph(static_cast<int>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, const std::string& comment) {
  if (!comment.empty()) {
    std::istringstream lines(comment);
    std::string line;
    while (std::getline(lines, line)) out << "c " << line << '\n';
  }
  out << "p " << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

std::string to_edge_list_string(const Graph& g, const std::string& comment) {
  std::ostringstream out;
  write_edge_list(out, g, comment);
  return out.str();
}

void write_edge_list_file(const std::filesystem::path& path, const Graph& g,
                          const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_edge_list(out, g, comment);
}

}  // namespace equicolor
