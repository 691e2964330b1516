#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ildkit {

// Raised when an instance exceeds a documented size cap of an exponential
// routine. Maps to CLI exit code 2.
class too_large_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using mask_t = std::uint64_t;

inline constexpr int max_vertices = 64;

constexpr mask_t bit(int v) { return mask_t{1} << v; }
constexpr mask_t full_mask(int n) {
  return n >= 64 ? ~mask_t{0} : (mask_t{1} << n) - 1;
}

// Subset of vertices as a single machine word. Vertices are 0-based
// internally; external labels (CLI, file formats, reports) are 1-based.
struct VertexSet {
  mask_t bits = 0;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(mask_t m) : bits(m) {}

  bool contains(int v) const { return bits & bit(v); }
  void add(int v) { bits |= bit(v); }
  void remove(int v) { bits &= ~bit(v); }
  int size() const { return __builtin_popcountll(bits); }
  bool empty() const { return bits == 0; }

  // ascending 0-based members
  std::vector<int> members() const {
    std::vector<int> out;
    for (mask_t m = bits; m; m &= m - 1) out.push_back(__builtin_ctzll(m));
    return out;
  }
  // ascending 1-based external labels
  std::vector<int> labels() const {
    std::vector<int> out = members();
    for (int& v : out) ++v;
    return out;
  }
  static VertexSet from_labels(const std::vector<int>& labels, int n);

  friend bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
  friend bool operator!=(VertexSet a, VertexSet b) { return a.bits != b.bits; }
};

// Immutable simple undirected graph on vertices 0..n-1 (externally 1..n),
// adjacency stored as one open-neighborhood bit mask per vertex.
class Graph {
 public:
  Graph() = default;

  // Endpoints are 1-based external labels; duplicate edges collapse, loops
  // and out-of-range endpoints are rejected.
  static Graph build(int n, const std::vector<std::pair<int, int>>& edges);

  // Internal constructor from 0-based adjacency masks (symmetry-checked).
  static Graph from_adjacency(std::vector<mask_t> adj);

  int order() const { return n_; }
  int size() const;  // number of edges

  mask_t neighbors(int v) const { return adj_[v]; }
  mask_t closed_neighbors(int v) const { return adj_[v] | bit(v); }
  int degree(int v) const { return __builtin_popcountll(adj_[v]); }
  bool adjacent(int u, int v) const { return adj_[u] & bit(v); }
  mask_t vertices() const { return full_mask(n_); }

  bool connected() const;

  // 0-based edge pairs, u < v, ascending
  std::vector<std::pair<int, int>> edges() const;

  // Graph induced on `keep`, vertices relabeled 0..k-1 in ascending order of
  // original index; `embedding` (optional out) maps new index -> original.
  Graph induced(mask_t keep, std::vector<int>* embedding = nullptr) const;

  // Graph with vertices renamed through perm: vertex v becomes perm[v].
  Graph relabeled(const std::vector<int>& perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  std::vector<mask_t> adj_;
};

// ---- structural predicates ----------------------------------------------

enum class TwinKind { Open, True };

struct TwinClass {
  TwinKind kind;
  VertexSet members;  // size >= 2
};

struct TwinPartition {
  std::vector<TwinClass> classes;  // maximal classes of size >= 2, by kind
  VertexSet untwinned;             // vertices in no class above (singletons)
  bool twin_free() const { return classes.empty(); }
};

// Maximal classes of the open-twin relation (N(u)=N(v)) and the true-twin
// relation (N[u]=N[v]). A vertex belonging to one class of each kind is
// reported in both (the two relations never merge).
TwinPartition twin_classes(const Graph& g);
bool is_twin_free(const Graph& g);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

// The unique 2-coloring classes of a connected bipartite graph, the part
// containing vertex 0 first; nullopt when an odd cycle exists.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

struct StructureSummary {
  VertexSet leaves;
  VertexSet supports;         // adjacent to at least one leaf
  VertexSet strong_supports;  // adjacent to at least two leaves
  int min_degree = 0;
  int max_degree = 0;
  std::vector<VertexSet> components;
};

StructureSummary structure(const Graph& g);

std::vector<VertexSet> components(const Graph& g);

bool is_tree(const Graph& g);
bool is_unicyclic(const Graph& g);  // connected and |E| == |V|

// ---- unicyclic decomposition --------------------------------------------

struct BranchingTree {
  Graph tree;              // the branch as a standalone tree, relabeled
  std::vector<int> embed;  // tree vertex -> original vertex
  int root = 0;            // index (in tree) of the cycle vertex
};

struct UnicyclicDecomposition {
  std::vector<int> cycle;             // cycle vertices in cyclic order
  std::vector<BranchingTree> branch;  // branch[i] hangs at cycle[i]
};

// Strips degree-1 vertices to expose the unique cycle, then splits off the
// per-cycle-vertex branching trees (the components of G minus the cycle's
// edges). Throws std::invalid_argument unless G is connected with |E|=|V|.
UnicyclicDecomposition decompose_unicyclic(const Graph& g);

}  // namespace ildkit
