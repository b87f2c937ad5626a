#ifndef EDEGEN_EDGE_LIST_HPP
#define EDEGEN_EDGE_LIST_HPP

#include <filesystem>
#include <iosfwd>
#include <string>

#include "edegen/graph.hpp"

namespace edegen {

// Edge-list text format:
//
//   n <count>
//   u v        (one edge per line, 0 <= u < v < count)
//
// Blank lines and anything after '#' are ignored.

Graph read_edge_list(std::istream& in);
Graph read_edge_list(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list(const std::filesystem::path& path, const Graph& g);

std::string to_edge_list(const Graph& g);

}  // namespace edegen

#endif  // EDEGEN_EDGE_LIST_HPP
