#include "ildkit/graph.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <map>

namespace ildkit {

VertexSet VertexSet::from_labels(const std::vector<int>& labels, int n) {
  VertexSet s;
  for (int lab : labels) {
    if (lab < 1 || lab > n)
      throw std::invalid_argument("vertex label " + std::to_string(lab) +
                                  " out of range 1.." + std::to_string(n));
    s.add(lab - 1);
  }
  return s;
}

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1 || n > max_vertices)
    throw std::invalid_argument("vertex count must be in 1.." +
                                std::to_string(max_vertices));
  std::vector<mask_t> adj(n, 0);
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw std::invalid_argument("edge endpoint out of range 1.." +
                                  std::to_string(n));
    if (u == v)
      throw std::invalid_argument("loop edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") rejected");
    adj[u - 1] |= bit(v - 1);
    adj[v - 1] |= bit(u - 1);
  }
  Graph g;
  g.n_ = n;
  g.adj_ = std::move(adj);
  return g;
}

Graph Graph::from_adjacency(std::vector<mask_t> adj) {
  const int n = static_cast<int>(adj.size());
  if (n < 1 || n > max_vertices)
    throw std::invalid_argument("vertex count must be in 1.." +
                                std::to_string(max_vertices));
  for (int v = 0; v < n; ++v) {
    if (adj[v] & ~full_mask(n))
      throw std::invalid_argument("adjacency mask out of range");
    if (adj[v] & bit(v)) throw std::invalid_argument("loop in adjacency");
    for (mask_t m = adj[v]; m; m &= m - 1) {
      int u = __builtin_ctzll(m);
      if (!(adj[u] & bit(v)))
        throw std::invalid_argument("asymmetric adjacency");
    }
  }
  Graph g;
  g.n_ = n;
  g.adj_ = std::move(adj);
  return g;
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

bool Graph::connected() const {
  if (n_ == 0) return false;
  mask_t seen = bit(0), frontier = bit(0);
  while (frontier) {
    mask_t next = 0;
    for (mask_t m = frontier; m; m &= m - 1) next |= adj_[__builtin_ctzll(m)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == vertices();
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (mask_t m = adj_[u] & ~full_mask(u + 1); m; m &= m - 1)
      out.emplace_back(u, __builtin_ctzll(m));
  return out;
}

Graph Graph::induced(mask_t keep, std::vector<int>* embedding) const {
  std::vector<int> emb;
  std::array<int, max_vertices> newid{};
  for (mask_t m = keep; m; m &= m - 1) {
    int v = __builtin_ctzll(m);
    newid[v] = static_cast<int>(emb.size());
    emb.push_back(v);
  }
  std::vector<mask_t> adj(emb.size(), 0);
  for (std::size_t i = 0; i < emb.size(); ++i)
    for (mask_t m = adj_[emb[i]] & keep; m; m &= m - 1)
      adj[i] |= bit(newid[__builtin_ctzll(m)]);
  if (embedding) *embedding = std::move(emb);
  Graph g;
  g.n_ = static_cast<int>(adj.size());
  g.adj_ = std::move(adj);
  return g;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  assert(static_cast<int>(perm.size()) == n_);
  std::vector<mask_t> adj(n_, 0);
  for (int v = 0; v < n_; ++v)
    for (mask_t m = adj_[v]; m; m &= m - 1)
      adj[perm[v]] |= bit(perm[__builtin_ctzll(m)]);
  Graph g;
  g.n_ = n_;
  g.adj_ = std::move(adj);
  return g;
}

TwinPartition twin_classes(const Graph& g) {
  const int n = g.order();
  TwinPartition part;
  mask_t twinned = 0;
  // group by open neighborhood, then by closed neighborhood
  for (int kind = 0; kind < 2; ++kind) {
    std::map<mask_t, mask_t> groups;
    for (int v = 0; v < n; ++v) {
      mask_t key = kind == 0 ? g.neighbors(v) : g.closed_neighbors(v);
      groups[key] |= bit(v);
    }
    for (auto& [key, members] : groups) {
      (void)key;
      if (__builtin_popcountll(members) >= 2) {
        part.classes.push_back(
            {kind == 0 ? TwinKind::Open : TwinKind::True, VertexSet{members}});
        twinned |= members;
      }
    }
  }
  part.untwinned = VertexSet{g.vertices() & ~twinned};
  return part;
}

bool is_twin_free(const Graph& g) { return twin_classes(g).twin_free(); }

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = -1;
  std::array<int, max_vertices> dist{};
  std::array<int, max_vertices> parent{};
  std::array<int, max_vertices> queue{};
  for (int root = 0; root < n; ++root) {
    dist.fill(-1);
    dist[root] = 0;
    parent[root] = -1;
    int head = 0, tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      int u = queue[head++];
      for (mask_t m = g.neighbors(u); m; m &= m - 1) {
        int w = __builtin_ctzll(m);
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue[tail++] = w;
        } else if (w != parent[u]) {
          int len = dist[u] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
  if (!g.connected())
    throw std::invalid_argument("bipartition requires a connected graph");
  const int n = g.order();
  std::array<int, max_vertices> color{};
  color.fill(-1);
  color[0] = 0;
  std::array<int, max_vertices> queue{};
  int head = 0, tail = 0;
  queue[tail++] = 0;
  while (head < tail) {
    int u = queue[head++];
    for (mask_t m = g.neighbors(u); m; m &= m - 1) {
      int w = __builtin_ctzll(m);
      if (color[w] < 0) {
        color[w] = color[u] ^ 1;
        queue[tail++] = w;
      } else if (color[w] == color[u]) {
        return std::nullopt;
      }
    }
  }
  VertexSet side0, side1;
  for (int v = 0; v < n; ++v) (color[v] == 0 ? side0 : side1).add(v);
  return std::make_pair(side0, side1);
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  mask_t left = g.vertices();
  while (left) {
    mask_t seen = bit(__builtin_ctzll(left));
    mask_t frontier = seen;
    while (frontier) {
      mask_t next = 0;
      for (mask_t m = frontier; m; m &= m - 1)
        next |= g.neighbors(__builtin_ctzll(m));
      frontier = next & ~seen;
      seen |= next;
    }
    out.push_back(VertexSet{seen});
    left &= ~seen;
  }
  return out;
}

StructureSummary structure(const Graph& g) {
  StructureSummary s;
  const int n = g.order();
  s.min_degree = n > 0 ? g.degree(0) : 0;
  s.max_degree = 0;
  for (int v = 0; v < n; ++v) {
    int d = g.degree(v);
    s.min_degree = std::min(s.min_degree, d);
    s.max_degree = std::max(s.max_degree, d);
    if (d == 1) s.leaves.add(v);
  }
  for (int v = 0; v < n; ++v) {
    int leaf_neighbors = __builtin_popcountll(g.neighbors(v) & s.leaves.bits);
    if (leaf_neighbors >= 1) s.supports.add(v);
    if (leaf_neighbors >= 2) s.strong_supports.add(v);
  }
  s.components = components(g);
  return s;
}

bool is_tree(const Graph& g) {
  return g.connected() && g.size() == g.order() - 1;
}

bool is_unicyclic(const Graph& g) {
  return g.connected() && g.size() == g.order();
}

UnicyclicDecomposition decompose_unicyclic(const Graph& g) {
  if (!g.connected()) throw std::invalid_argument("graph is not connected");
  if (g.size() != g.order())
    throw std::invalid_argument("graph is not unicyclic (|E| != |V|)");
  const int n = g.order();

  // iteratively strip leaves; the 2-regular remainder is the cycle
  mask_t alive = g.vertices();
  bool changed = true;
  while (changed) {
    changed = false;
    for (mask_t m = alive; m; m &= m - 1) {
      int v = __builtin_ctzll(m);
      if (__builtin_popcountll(g.neighbors(v) & alive) <= 1) {
        alive &= ~bit(v);
        changed = true;
      }
    }
  }
  assert(alive != 0);

  UnicyclicDecomposition d;
  int start = __builtin_ctzll(alive);
  int prev = -1, cur = start;
  do {
    d.cycle.push_back(cur);
    mask_t next_candidates = g.neighbors(cur) & alive;
    if (prev >= 0) next_candidates &= ~bit(prev);
    // start's two cycle neighbors: walk toward the smaller label first
    prev = cur;
    cur = __builtin_ctzll(next_candidates);
  } while (cur != start);

  // branching trees = components of G minus the cycle's edges
  const int glen = static_cast<int>(d.cycle.size());
  std::vector<mask_t> adj_cut(n);
  for (int v = 0; v < n; ++v) adj_cut[v] = g.neighbors(v);
  for (int i = 0; i < glen; ++i) {
    int u = d.cycle[i], w = d.cycle[(i + 1) % glen];
    adj_cut[u] &= ~bit(w);
    adj_cut[w] &= ~bit(u);
  }
  mask_t assigned = 0;
  for (int i = 0; i < glen; ++i) {
    mask_t seen = bit(d.cycle[i]);
    mask_t frontier = seen;
    while (frontier) {
      mask_t next = 0;
      for (mask_t m = frontier; m; m &= m - 1)
        next |= adj_cut[__builtin_ctzll(m)];
      frontier = next & ~seen;
      seen |= next;
    }
    // each off-cycle vertex reaches exactly one cycle vertex
    if (seen & assigned)
      throw std::logic_error("branching trees overlap in a unicyclic graph");
    assigned |= seen;
    BranchingTree bt;
    bt.tree = g.induced(seen, &bt.embed);
    bt.root = static_cast<int>(
        std::find(bt.embed.begin(), bt.embed.end(), d.cycle[i]) -
        bt.embed.begin());
    d.branch.push_back(std::move(bt));
  }
  if (assigned != g.vertices())
    throw std::logic_error("branching trees do not cover the graph");
  return d;
}

}  // namespace ildkit
