#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ildkit/graph.hpp"

namespace ildkit {

// graph6: one printable line per graph; a single order byte 63 + n for
// n <= 62, then the upper triangle of the adjacency matrix in column order
// ((0,1),(0,2),(1,2),(0,3),...), packed 6 bits per byte MSB-first, each byte
// offset by 63, padding bits zero. Strict: wrong length, bytes outside
// 63..126, nonzero padding, and the multi-byte order marker are rejected.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// edge list: a header line with n, then one "u v" line per edge (1-based)
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

// undirected DOT with 1-based node labels
std::string write_dot(const Graph& g);

// one graph per nonempty line
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace ildkit
