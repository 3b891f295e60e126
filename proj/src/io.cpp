#include "acymatch/io.hpp"

#include <fstream>
#include <sstream>

namespace acym {

namespace {

bool data_line(const std::string& line, std::string& out) {
  size_t start = line.find_first_not_of(" \t\r");
  if (start == std::string::npos) return false;
  if (line[start] == '#') return false;
  out = line;
  return true;
}

std::pair<long long, long long> parse_int_pair(const std::string& line, long long lineno,
                                               const char* what) {
  std::istringstream ss(line);
  long long a = 0, b = 0;
  std::string extra;
  if (!(ss >> a >> b) || (ss >> extra))
    fail(errc::parse_error,
         std::string("line ") + std::to_string(lineno) + ": expected two integers (" + what + ")");
  return {a, b};
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line, data;
  long long lineno = 0;
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (!data_line(line, data)) continue;
    if (n < 0) {
      auto [a, b] = parse_int_pair(data, lineno, "n m");
      if (a < 0 || b < 0) fail(errc::parse_error, "negative n or m in header");
      n = a;
      m = b;
      edges.reserve(static_cast<size_t>(m));
      continue;
    }
    if (static_cast<long long>(edges.size()) == m)
      fail(errc::parse_error, "line " + std::to_string(lineno) + ": more than m edge lines");
    auto [u, v] = parse_int_pair(data, lineno, "u v");
    if (u < 0 || v < 0 || u >= n || v >= n)
      fail(errc::parse_error, "line " + std::to_string(lineno) + ": vertex out of range");
    edges.push_back(Edge{static_cast<int>(u), static_cast<int>(v)});
  }
  if (n < 0) fail(errc::parse_error, "missing \"n m\" header line");
  if (static_cast<long long>(edges.size()) != m)
    fail(errc::parse_error, "expected " + std::to_string(m) + " edges, found " +
                                std::to_string(edges.size()));
  return build_graph(static_cast<int>(n), edges);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream ss(text);
  return parse_edge_list(ss);
}

Graph read_edge_list(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(errc::io_error, "cannot open " + path);
  return parse_edge_list(f);
}

void write_edge_list(std::ostream& out, const Graph& g,
                     const std::vector<std::string>& header_comments) {
  for (const std::string& c : header_comments) out << "# " << c << "\n";
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream ss;
  write_edge_list(ss, g);
  return ss.str();
}

void save_edge_list(const std::string& path, const Graph& g,
                    const std::vector<std::string>& header_comments) {
  std::ofstream f(path);
  if (!f) fail(errc::io_error, "cannot open " + path + " for writing");
  write_edge_list(f, g, header_comments);
}

Matching parse_matching(std::istream& in) {
  std::string line, data;
  long long lineno = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (!data_line(line, data)) continue;
    auto [u, v] = parse_int_pair(data, lineno, "u v");
    if (u < 0 || v < 0)
      fail(errc::parse_error, "line " + std::to_string(lineno) + ": negative vertex");
    if (u == v) fail(errc::parse_error, "line " + std::to_string(lineno) + ": self-loop");
    edges.push_back(Edge{static_cast<int>(u), static_cast<int>(v)});
  }
  return Matching::from_edges(std::move(edges));
}

Matching parse_matching(const std::string& text) {
  std::istringstream ss(text);
  return parse_matching(ss);
}

Matching read_matching(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(errc::io_error, "cannot open " + path);
  return parse_matching(f);
}

void write_matching(std::ostream& out, const Matching& m) {
  for (const Edge& e : m.edges) out << e.u << " " << e.v << "\n";
}

std::string to_matching_text(const Matching& m) {
  std::ostringstream ss;
  write_matching(ss, m);
  return ss.str();
}

void save_matching(const std::string& path, const Matching& m) {
  std::ofstream f(path);
  if (!f) fail(errc::io_error, "cannot open " + path + " for writing");
  write_matching(f, m);
}

}  // namespace acym
