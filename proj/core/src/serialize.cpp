#include "ildkit/serialize.hpp"

#include <istream>
#include <sstream>

namespace ildkit {

namespace {
constexpr int g6_offset = 63;
constexpr int g6_max_order = 62;
}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw std::invalid_argument("empty graph6 line");
  const unsigned char first = static_cast<unsigned char>(line[0]);
  if (first == 126)
    throw std::invalid_argument("multi-byte graph6 order (n > 62) unsupported");
  if (first < g6_offset || first > 126)
    throw std::invalid_argument("malformed graph6 byte");
  const int n = first - g6_offset;
  if (n < 1) throw std::invalid_argument("graph6 order must be >= 1");
  const int nbits = n * (n - 1) / 2;
  const std::size_t expect = 1 + (nbits + 5) / 6;
  if (line.size() != expect)
    throw std::invalid_argument("graph6 line length " +
                                std::to_string(line.size()) + ", expected " +
                                std::to_string(expect));
  std::vector<mask_t> adj(n, 0);
  int bit_index = 0;
  for (std::size_t i = 1; i < line.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(line[i]);
    if (c < g6_offset || c > 126)
      throw std::invalid_argument("malformed graph6 byte");
    const int chunk = c - g6_offset;
    for (int b = 5; b >= 0; --b, ++bit_index) {
      const bool set = (chunk >> b) & 1;
      if (bit_index >= nbits) {
        if (set) throw std::invalid_argument("nonzero graph6 padding");
        continue;
      }
      if (set) {
        // column order: bit_index counts (u,v) pairs with v = 1..n-1, u < v
        int v = 1;
        int idx = bit_index;
        while (idx >= v) {
          idx -= v;
          ++v;
        }
        const int u = idx;
        adj[u] |= bit(v);
        adj[v] |= bit(u);
      }
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > g6_max_order)
    throw std::invalid_argument("graph6 supports at most 62 vertices");
  std::string out;
  out.push_back(static_cast<char>(n + g6_offset));
  int chunk = 0, filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + g6_offset));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((chunk << (6 - filled)) + g6_offset));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  int n = 0;
  if (!(in >> n)) throw std::invalid_argument("edge list: missing order");
  std::vector<std::pair<int, int>> edges;
  int u, v;
  while (in >> u) {
    if (!(in >> v))
      throw std::invalid_argument("edge list: dangling endpoint");
    edges.emplace_back(u, v);
  }
  if (!in.eof()) {
    in.clear();
    std::string rest;
    in >> rest;
    if (!rest.empty())
      throw std::invalid_argument("edge list: unexpected token '" + rest + "'");
  }
  return Graph::build(n, edges);
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges())
    out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

std::string write_dot(const Graph& g) {
  std::string out = "graph G {\n";
  mask_t isolated = g.vertices();
  for (auto [u, v] : g.edges()) {
    out += "  " + std::to_string(u + 1) + " -- " + std::to_string(v + 1) +
           ";\n";
    isolated &= ~(bit(u) | bit(v));
  }
  for (mask_t m = isolated; m; m &= m - 1)
    out += "  " + std::to_string(__builtin_ctzll(m) + 1) + ";\n";
  out += "}\n";
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
      line.pop_back();
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

}  // namespace ildkit
