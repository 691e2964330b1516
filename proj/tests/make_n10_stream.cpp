// Produces a graph6 stream of every connected triangle-free graph on 10
// vertices (one per isomorphism class), the input needed by the gated
// order-10 girth-4 census in the acceptance suite:
//
//   ildkit_make_n10_stream > n10.g6
//   ILDKIT_N10_G6=n10.g6 ildkit_acceptance --criterion 2
//
// Triangle-free suffices: a girth-4 graph has no triangle, and restricting
// the vertex-augmentation to independent neighborhoods keeps every level
// triangle-free while still reaching every class (deleting a minimum-degree
// vertex of a triangle-free graph leaves a triangle-free graph).

#include <iostream>
#include <unordered_set>
#include <vector>

#include "ildkit/census.hpp"
#include "ildkit/graph.hpp"
#include "ildkit/serialize.hpp"

using namespace ildkit;

namespace {

Graph extend(const Graph& g, mask_t nbrs) {
  const int k = g.order();
  std::vector<mask_t> adj(k + 1, 0);
  for (int v = 0; v < k; ++v) adj[v] = g.neighbors(v);
  adj[k] = nbrs;
  for (mask_t m = nbrs; m; m &= m - 1) adj[__builtin_ctzll(m)] |= bit(k);
  return Graph::from_adjacency(std::move(adj));
}

}  // namespace

int main(int argc, char** argv) {
  const int target = argc > 1 ? std::atoi(argv[1]) : 10;
  if (target < 1 || target > 10) {
    std::cerr << "order must be between 1 and 10\n";
    return 1;
  }
  std::vector<Graph> level = {Graph::build(1, {})};
  for (int k = 1; k < target; ++k) {
    std::unordered_set<std::string> seen;
    std::vector<Graph> next;
    for (const Graph& g : level) {
      for (mask_t m = 0; m < (mask_t{1} << k); ++m) {
        const int newdeg = __builtin_popcountll(m);
        bool ok = true;
        for (mask_t probe = m; probe && ok; probe &= probe - 1)
          if (g.neighbors(__builtin_ctzll(probe)) & m) ok = false;  // triangle
        for (int v = 0; v < k && ok; ++v)
          if (g.degree(v) + static_cast<int>((m >> v) & 1) < newdeg)
            ok = false;  // the new vertex must have minimum degree
        if (!ok) continue;
        Graph h = canonical_graph(extend(g, m));
        if (seen.insert(write_graph6(h)).second) next.push_back(std::move(h));
      }
    }
    level = std::move(next);
    std::cerr << "triangle-free classes on " << (k + 1) << " vertices: "
              << level.size() << "\n";
  }
  std::uint64_t connected = 0;
  for (const Graph& g : level) {
    if (!g.connected()) continue;
    ++connected;
    std::cout << write_graph6(g) << "\n";
  }
  std::cerr << "connected: " << connected << "\n";
  return 0;
}
