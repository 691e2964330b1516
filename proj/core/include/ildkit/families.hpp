#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ildkit/graph.hpp"

namespace ildkit {

enum class FamilyKind {
  Path,
  Cycle,
  Complete,
  CompleteBipartite,
  Star,
  Wheel,
  Split,
  GammaR,
  Fig5Tree,  // spider: center, h pendant leaves, k-h legs of length 3
};

std::optional<FamilyKind> family_kind_from_name(const std::string& name);
std::string family_kind_name(FamilyKind kind);

// Vertex labeling conventions (all 1-based):
//   path/cycle: numbered along the path / around the cycle
//   complete_bipartite r,s: first part 1..r, second r+1..r+s
//   star on n: center 1, leaves 2..n
//   wheel on n: rim cycle 1..n-1, hub n
//   split r,s: clique 1..r, stable set r+1..r+s, cross edges from the
//     incidence list (pairs of clique index 1..r and stable index 1..s);
//     empty incidence means the complete join
//   gamma_r: clique 1..r; vertex r+j (j = 1..2^r-1) is joined to exactly the
//     clique vertices i with bit i-1 set in j
//   spider h,k (2 <= h <= k): center 1; pendant leaves 2..h+1; then k-h legs
//     x,y,z consecutive, x adjacent to the center
struct FamilySpec {
  FamilyKind kind;
  int n = 0, r = 0, s = 0, h = 0, k = 0;
  std::vector<std::pair<int, int>> split_incidence;  // empty => complete join
};

Graph generate(const FamilySpec& spec);

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int r, int s);
Graph star(int n);
Graph wheel(int n);
Graph split_graph(int r, int s,
                  const std::vector<std::pair<int, int>>& incidence);
Graph gamma_r(int r);          // order r + 2^r - 1, attains iota = 2^(gamma_l - 1)
Graph fig5_tree(int h, int k); // order 3k - 2h + 1 with k leaves

struct Table1Row {
  int gamma = 0, iota = 0, gamma_l = 0, alpha = 0;
  std::optional<int> iota_l;  // absent = no ILD-set in this family member
};

// Closed forms for the basic families. Row constraints: cycle needs n >= 4
// (n == 4 is the special non-ILD row), complete n >= 3, complete_bipartite
// 1 < r <= n - r, wheel n >= 7, star n >= 2, path n >= 1.
Table1Row table1_expected(FamilyKind kind, int n, int r = 0);

// The two claimed witness sets of the spider tree: S1 of size k for gamma_l
// and S2 of size 2k - h for iota_l.
std::pair<VertexSet, VertexSet> fig5_witnesses(int h, int k);

enum class RealizationRegion { Tree, TwinFreeTree };

struct Realization {
  Graph witness;
  int gamma_l = 0;
  int iota_l = 0;
};

// A tree with gamma_l = r and iota_l = s. The Tree region (s <= 2r - 2)
// instantiates the spider with h = 2r - s, k = r; the TwinFreeTree region
// (s <= 2r - 3) searches the enumerated twin-free trees up to max_n.
// Throws std::runtime_error naming the cap when the search is exhausted.
Realization realization_search(int r, int s, RealizationRegion region,
                               int max_n = 13);

}  // namespace ildkit
