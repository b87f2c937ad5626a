#include "edegen/edge_list.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "edegen/errors.hpp"

namespace edegen {
namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool is_blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw ParseError("edge list line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  long long n = -1;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = strip_comment(line);
    if (is_blank(body)) continue;
    std::istringstream fields(body);
    if (n < 0) {
      std::string tag;
      if (!(fields >> tag >> n) || tag != "n") fail(line_no, "expected header 'n <count>'");
      if (n < 1) fail(line_no, "node count must be positive");
    } else {
      long long u = 0;
      long long v = 0;
      if (!(fields >> u >> v)) fail(line_no, "expected 'u v'");
      if (u < 0 || v >= n || u >= v) fail(line_no, "edge must satisfy 0 <= u < v < n");
      edges.emplace_back(static_cast<Node>(u), static_cast<Node>(v));
    }
    std::string extra;
    if (fields >> extra) fail(line_no, "unexpected trailing token '" + extra + "'");
  }
  if (n < 0) throw ParseError("edge list is missing the 'n <count>' header");

  Graph g(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    if (!g.add_edge(u, v)) {
      throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
  }
  return g;
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_edge_list(out, g);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace edegen
