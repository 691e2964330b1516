#include "ildkit/constructive.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace ildkit {

namespace {

ConstructionResult exact_fallback(const Graph& g) {
  auto opt = parameter(g, Param::IotaL);
  if (!opt) throw std::runtime_error("graph has no ILD-set");
  return {opt->witness, true, Method::FallbackExact};
}

bool verified_ild(const Graph& g, mask_t s) {
  return check(g, VertexSet{s}).ild;
}

// ---- Algorithm 1 ----------------------------------------------------------

// smaller 2-coloring class of a connected induced subgraph `comp` of g,
// ties broken toward the class holding the smallest vertex
mask_t smaller_color_class(const Graph& g, mask_t comp) {
  int start = __builtin_ctzll(comp);
  mask_t side0 = bit(start), side1 = 0, frontier = bit(start), seen = side0;
  bool level = false;
  while (frontier) {
    mask_t next = 0;
    for (mask_t m = frontier; m; m &= m - 1)
      next |= g.neighbors(__builtin_ctzll(m)) & comp;
    next &= ~seen;
    level = !level;
    (level ? side1 : side0) |= next;
    seen |= next;
    frontier = next;
  }
  int c0 = __builtin_popcountll(side0), c1 = __builtin_popcountll(side1);
  if (c0 != c1) return c0 < c1 ? side0 : side1;
  return side0;  // side0 holds the smallest vertex of the component
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::Algo1:
      return "algo1";
    case Method::Algo2Literal:
      return "algo2-literal";
    case Method::Algo2Completed:
      return "algo2-completed";
    case Method::NineCase:
      return "nine-case";
    case Method::StableSide:
      return "stable-side";
    case Method::MaxIndependent:
      return "max-independent";
    case Method::FallbackExact:
      return "fallback-exact";
  }
  return "?";
}

ConstructionResult tree_ild(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("input is not a tree");
  if (t.order() < 2) throw std::invalid_argument("tree must have n >= 2");
  const int n = t.order();

  mask_t s = 0;
  mask_t alive = t.vertices();
  // twin-leaf elimination, supports in ascending label order, re-scanned
  // after every deletion since deletions can create new twin classes
  bool deleted = true;
  while (deleted) {
    deleted = false;
    for (int u = 0; u < n && !deleted; ++u) {
      if (!(alive & bit(u))) continue;
      mask_t leaves = 0;
      for (mask_t m = t.neighbors(u) & alive; m; m &= m - 1) {
        int v = __builtin_ctzll(m);
        if (__builtin_popcountll(t.neighbors(v) & alive) == 1) leaves |= bit(v);
      }
      if (__builtin_popcountll(leaves) >= 2) {
        s |= leaves;
        alive &= ~(leaves | bit(u));
        deleted = true;
      }
    }
  }

  // 2-color what is left, component by component
  mask_t rest = alive;
  while (rest) {
    mask_t comp = bit(__builtin_ctzll(rest));
    mask_t frontier = comp;
    while (frontier) {
      mask_t next = 0;
      for (mask_t m = frontier; m; m &= m - 1)
        next |= t.neighbors(__builtin_ctzll(m)) & alive;
      frontier = next & ~comp;
      comp |= next;
    }
    s |= smaller_color_class(t, comp);
    rest &= ~comp;
  }

  if (verified_ild(t, s)) return {VertexSet{s}, true, Method::Algo1};
  return exact_fallback(t);
}

ConstructionResult stable_side_ild(const Graph& g, int v, bool include) {
  auto parts = bipartition(g);
  if (!parts) throw std::invalid_argument("graph is not bipartite");
  mask_t side = parts->first.contains(v) == include ? parts->first.bits
                                                    : parts->second.bits;
  if (verified_ild(g, side))
    return {VertexSet{side}, true, Method::StableSide};
  auto constrained = min_ild_constrained(g, v, include);
  if (!constrained)
    throw std::runtime_error("no constrained ILD-set exists for vertex " +
                             std::to_string(v + 1));
  return {constrained->witness, true, Method::FallbackExact};
}

namespace {

// ---- constrained sub-solutions for the nine-case assembly -----------------

// Minimum independent X avoiding `exempt` that dominates and locates every
// vertex of g other than `exempt` (whose domination and location the caller
// settles through the rest of the assembly).
std::optional<mask_t> relaxed_exempt_search(const Graph& g, int exempt) {
  const int n = g.order();
  mask_t universe = g.vertices() & ~bit(exempt);
  auto ok = [&](mask_t x) {
    for (mask_t m = x; m; m &= m - 1)
      if (g.neighbors(__builtin_ctzll(m)) & x) return false;
    std::array<mask_t, max_vertices> traces;
    int cnt = 0;
    for (mask_t m = universe & ~x; m; m &= m - 1) {
      mask_t tr = g.neighbors(__builtin_ctzll(m)) & x;
      if (!tr) return false;
      traces[cnt++] = tr;
    }
    std::sort(traces.begin(), traces.begin() + cnt);
    for (int i = 1; i < cnt; ++i)
      if (traces[i] == traces[i - 1]) return false;
    return true;
  };
  for (int k = 0; k <= n - 1; ++k) {
    std::optional<mask_t> found;
    // odometer over universe
    std::vector<int> pos;
    for (mask_t m = universe; m; m &= m - 1) pos.push_back(__builtin_ctzll(m));
    const int sz = static_cast<int>(pos.size());
    if (k > sz) break;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      mask_t x = 0;
      for (int i = 0; i < k; ++i) x |= bit(pos[idx[i]]);
      if (ok(x)) {
        found = x;
        break;
      }
      int i = k - 1;
      while (i >= 0 && idx[i] == sz - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (found) return found;
  }
  return std::nullopt;
}

// ILD-set of the standalone tree `sub` containing (or avoiding) vertex
// `target`; stable side when the tree is twin-free, constrained exact search
// otherwise, and for the avoiding mode a relaxed search (target exempt) as
// the last resort.
std::optional<mask_t> constrained_sub_ild(const Graph& sub, int target,
                                          bool include) {
  if (sub.order() == 1)
    return include ? std::optional<mask_t>(bit(target))
                   : relaxed_exempt_search(sub, target);
  if (is_twin_free(sub)) {
    auto parts = bipartition(sub);
    assert(parts);
    mask_t side = parts->first.contains(target) == include
                      ? parts->first.bits
                      : parts->second.bits;
    if (check(sub, VertexSet{side}).ild) return side;
  }
  if (auto exact = min_ild_constrained(sub, target, include))
    return exact->witness.bits;
  if (!include) return relaxed_exempt_search(sub, target);
  return std::nullopt;
}

struct TriangleBranch {
  int u;             // cycle vertex (original label)
  int deg;           // degree of u in g
  Graph tree;        // branching tree of u (contains u); trivial if deg == 2
  std::vector<int> embed;
  int u_in_tree = 0;
};

mask_t map_back(mask_t local, const std::vector<int>& embed) {
  mask_t out = 0;
  for (mask_t m = local; m; m &= m - 1) out |= bit(embed[__builtin_ctzll(m)]);
  return out;
}

// one constrained solution per (branch, mode), memoized
struct SubSolver {
  const TriangleBranch& br;
  std::optional<mask_t> cache[2][2];  // [hat][include]
  bool computed[2][2] = {{false, false}, {false, false}};

  explicit SubSolver(const TriangleBranch& b) : br(b) {}

  // hat = solve on the branch minus the cycle vertex, targeting its unique
  // attachment w; otherwise solve on the full branch targeting u itself
  std::optional<mask_t> solve(bool hat, bool include) {
    auto& slot = cache[hat][include];
    if (computed[hat][include]) return slot;
    computed[hat][include] = true;
    if (hat) {
      assert(br.deg == 3);
      mask_t keep = br.tree.vertices() & ~bit(br.u_in_tree);
      std::vector<int> emb;
      Graph sub = br.tree.induced(keep, &emb);
      int w_local = 0;  // locate the attachment inside sub
      mask_t wmask = br.tree.neighbors(br.u_in_tree);
      assert(__builtin_popcountll(wmask) == 1);
      int w_in_tree = __builtin_ctzll(wmask);
      w_local = static_cast<int>(
          std::find(emb.begin(), emb.end(), w_in_tree) - emb.begin());
      auto x = constrained_sub_ild(sub, w_local, include);
      if (x) {
        mask_t in_tree = 0;
        for (mask_t m = *x; m; m &= m - 1)
          in_tree |= bit(emb[__builtin_ctzll(m)]);
        slot = map_back(in_tree, br.embed);
      }
    } else {
      auto x = constrained_sub_ild(br.tree, br.u_in_tree, include);
      if (x) slot = map_back(*x, br.embed);
    }
    return slot;
  }
};

}  // namespace

ConstructionResult unicyclic_ild_girth3(const Graph& g) {
  if (!is_unicyclic(g)) throw std::invalid_argument("graph is not unicyclic");
  if (!is_twin_free(g)) throw std::invalid_argument("graph has twins");
  auto gi = girth(g);
  if (!gi || *gi != 3) throw std::invalid_argument("girth is not 3");

  UnicyclicDecomposition dec = decompose_unicyclic(g);
  assert(dec.cycle.size() == 3);

  std::array<TriangleBranch, 3> br;
  for (int i = 0; i < 3; ++i) {
    br[i].u = dec.cycle[i];
    br[i].deg = g.degree(dec.cycle[i]);
    br[i].tree = dec.branch[i].tree;
    br[i].embed = dec.branch[i].embed;
    br[i].u_in_tree = dec.branch[i].root;
  }
  // sort into the d1 <= d2 <= d3 profile, ties by label
  std::sort(br.begin(), br.end(), [](const TriangleBranch& a,
                                     const TriangleBranch& b) {
    return a.deg != b.deg ? a.deg < b.deg : a.u < b.u;
  });

  std::array<SubSolver, 3> solver{SubSolver{br[0]}, SubSolver{br[1]},
                                  SubSolver{br[2]}};

  // A pattern: which cycle vertex (if any) enters S, and for each degree-3
  // branch whether its hat-set contains the attachment vertex w.
  struct Pattern {
    int chosen;           // -1 or index 0..2 into br
    bool hat_include[3];  // meaningful only for deg==3 branches
  };

  auto assemble = [&](const Pattern& p) -> std::optional<mask_t> {
    mask_t s = 0;
    for (int i = 0; i < 3; ++i) {
      if (br[i].deg == 2) {
        if (p.chosen == i) s |= bit(br[i].u);
        continue;
      }
      if (br[i].deg == 3) {
        if (p.chosen == i) s |= bit(br[i].u);
        auto piece = solver[i].solve(/*hat=*/true, p.hat_include[i]);
        if (!piece) return std::nullopt;
        s |= *piece;
        continue;
      }
      // deg >= 4: the cycle vertex enters S only through its own tree
      auto piece = solver[i].solve(/*hat=*/false, p.chosen == i);
      if (!piece) return std::nullopt;
      s |= *piece;
    }
    return s;
  };

  // the literal pattern of the matching case
  Pattern literal{-1, {false, false, false}};
  const int d1 = br[0].deg, d2 = br[1].deg, d3 = br[2].deg;
  if (d1 == 2 && d2 == 2 && d3 == 3) {  // (1)
    literal = {0, {false, false, true}};
  } else if (d1 == 2 && d2 == 2) {  // (2): d3 >= 4
    literal = {0, {false, false, false}};
  } else if (d1 == 2 && d2 == 3 && d3 == 3) {  // (3)
    literal = {0, {false, true, true}};
  } else if (d1 == 2 && d2 == 3) {  // (4): d3 >= 4, S3 contains u3
    literal = {2, {false, true, false}};
  } else if (d1 == 2) {  // (5)
    literal = {0, {false, false, false}};
  } else if (d1 == 3 && d2 == 3 && d3 == 3) {  // (6)
    literal = {0, {false, true, true}};
  } else if (d1 == 3 && d2 == 3) {  // (7)
    literal = {0, {false, true, false}};
  } else if (d1 == 3) {  // (8)
    literal = {0, {false, false, false}};
  } else {  // (9)
    literal = {0, {false, false, false}};
  }

  auto try_pattern = [&](const Pattern& p) -> std::optional<mask_t> {
    auto s = assemble(p);
    if (s && verified_ild(g, *s)) return s;
    return std::nullopt;
  };

  if (auto s = try_pattern(literal))
    return {VertexSet{*s}, true, Method::NineCase};

  // nearby patterns: every choice of distinguished cycle vertex combined
  // with every hat orientation (the literal one already failed)
  for (int chosen = -1; chosen < 3; ++chosen) {
    for (int bits = 0; bits < 8; ++bits) {
      Pattern p{chosen,
                {(bits & 1) != 0, (bits & 2) != 0, (bits & 4) != 0}};
      if (p.chosen == literal.chosen &&
          p.hat_include[0] == literal.hat_include[0] &&
          p.hat_include[1] == literal.hat_include[1] &&
          p.hat_include[2] == literal.hat_include[2])
        continue;
      if (auto s = try_pattern(p)) return {VertexSet{*s}, true, Method::NineCase};
    }
  }
  return exact_fallback(g);
}

ConstructionResult unicyclic_ild(const Graph& g) {
  if (!is_unicyclic(g)) throw std::invalid_argument("graph is not unicyclic");
  if (!is_twin_free(g)) throw std::invalid_argument("graph has twins");
  auto gi = girth(g);
  assert(gi);
  if (*gi >= 5) {
    VertexSet s = max_independent_girth5_ild(g);
    return {s, true, Method::MaxIndependent};
  }
  if (*gi == 4) {
    auto parts = bipartition(g);
    assert(parts);  // the unique cycle is even
    mask_t a = parts->first.bits, b = parts->second.bits;
    mask_t side =
        __builtin_popcountll(a) <= __builtin_popcountll(b) ? a : b;
    if (verified_ild(g, side))
      return {VertexSet{side}, true, Method::StableSide};
    mask_t other = side == a ? b : a;
    if (verified_ild(g, other))
      return {VertexSet{other}, true, Method::StableSide};
    return exact_fallback(g);
  }
  return unicyclic_ild_girth3(g);
}

ConstructionResult unicyclic_ild_algo2(const Graph& g) {
  if (!is_unicyclic(g)) throw std::invalid_argument("graph is not unicyclic");
  if (!is_twin_free(g)) throw std::invalid_argument("graph has twins");

  UnicyclicDecomposition dec = decompose_unicyclic(g);
  const int glen = static_cast<int>(dec.cycle.size());

  // 2-color every branching tree, C0 holding the cycle vertex
  std::vector<mask_t> c0(glen), c1(glen);
  for (int i = 0; i < glen; ++i) {
    const BranchingTree& bt = dec.branch[i];
    auto parts = bipartition(bt.tree);
    assert(parts);
    mask_t root_side = parts->first.contains(bt.root) ? parts->first.bits
                                                      : parts->second.bits;
    mask_t other_side = parts->first.contains(bt.root) ? parts->second.bits
                                                       : parts->first.bits;
    c0[i] = map_back(root_side, bt.embed);
    c1[i] = map_back(other_side, bt.embed);
  }

  // the cycle as its own graph, indexed like dec.cycle
  std::vector<mask_t> cadj(glen, 0);
  for (int i = 0; i < glen; ++i) {
    cadj[i] |= bit((i + 1) % glen);
    cadj[i] |= bit((i + glen - 1) % glen);
  }
  Graph cycle_graph = Graph::from_adjacency(cadj);

  std::optional<ConstructionResult> best;
  auto offer = [&](mask_t s, Method m) {
    if (!verified_ild(g, s)) return;
    int sz = __builtin_popcountll(s);
    if (!best || sz < best->set.size() ||
        (sz == best->set.size() && m == Method::Algo2Literal &&
         best->method == Method::Algo2Completed) ||
        (sz == best->set.size() && m == best->method && s < best->set.bits))
      best = ConstructionResult{VertexSet{s}, true, m};
  };

  for_each_maximal_independent_set(cycle_graph, [&](mask_t i_set) {
    mask_t literal = 0, completed = 0;
    for (int i = 0; i < glen; ++i) {
      if (i_set & bit(i))
        literal |= c0[i];
      else
        completed |= c1[i];
    }
    completed |= literal;
    offer(literal, Method::Algo2Literal);
    offer(completed, Method::Algo2Completed);
    return true;
  });

  if (best) return *best;
  return exact_fallback(g);
}

}  // namespace ildkit
