#include "ildkit/exact.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace ildkit {

namespace {

bool traces_distinct(const Graph& g, mask_t s) {
  std::array<mask_t, max_vertices> traces;
  int cnt = 0;
  for (mask_t m = g.vertices() & ~s; m; m &= m - 1) {
    mask_t t = g.neighbors(__builtin_ctzll(m)) & s;
    if (!t) return false;
    traces[cnt++] = t;
  }
  std::sort(traces.begin(), traces.begin() + cnt);
  for (int i = 1; i < cnt; ++i)
    if (traces[i] == traces[i - 1]) return false;
  return true;
}

bool is_independent(const Graph& g, mask_t s) {
  for (mask_t m = s; m; m &= m - 1)
    if (g.neighbors(__builtin_ctzll(m)) & s) return false;
  return true;
}

bool is_dominating(const Graph& g, mask_t s) {
  for (mask_t m = g.vertices() & ~s; m; m &= m - 1)
    if (!(g.neighbors(__builtin_ctzll(m)) & s)) return false;
  return true;
}

// Enumerates k-subsets of `universe` via an index odometer; the callback
// returns true to stop.
template <typename F>
bool for_each_subset_of_size(mask_t universe, int k, F&& f) {
  std::array<int, max_vertices> pos;
  int m = 0;
  for (mask_t u = universe; u; u &= u - 1) pos[m++] = __builtin_ctzll(u);
  if (k > m) return false;
  if (k == 0) return f(mask_t{0});
  std::array<int, max_vertices> idx;
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    mask_t s = 0;
    for (int i = 0; i < k; ++i) s |= bit(pos[idx[i]]);
    if (f(s)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Smallest k such that a locating set of size k can tell apart the n-k
// outsiders: n - k <= 2^k - 1.
int locating_lower_bound(int n) {
  int k = 0;
  while (k < 63 && static_cast<mask_t>(n - k) > (mask_t{1} << k) - 1) ++k;
  return std::max(k, 1);
}

void bron_kerbosch(const std::array<mask_t, max_vertices>& cadj, mask_t R,
                   mask_t P, mask_t X, const std::function<bool(mask_t)>& f,
                   bool& stopped) {
  if (stopped) return;
  if (!P && !X) {
    if (!f(R)) stopped = true;
    return;
  }
  // pivot maximizing |P & cadj[u]|
  int pivot = -1, best = -1;
  for (mask_t m = P | X; m; m &= m - 1) {
    int u = __builtin_ctzll(m);
    int c = __builtin_popcountll(P & cadj[u]);
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  for (mask_t cand = P & ~cadj[pivot]; cand; cand &= cand - 1) {
    int v = __builtin_ctzll(cand);
    bron_kerbosch(cadj, R | bit(v), P & cadj[v], X & cadj[v], f, stopped);
    if (stopped) return;
    P &= ~bit(v);
    X |= bit(v);
  }
}

std::array<mask_t, max_vertices> complement_adjacency(const Graph& g) {
  std::array<mask_t, max_vertices> cadj{};
  for (int v = 0; v < g.order(); ++v)
    cadj[v] = ~g.neighbors(v) & g.vertices() & ~bit(v);
  return cadj;
}

void require_small(const Graph& g, const char* what) {
  if (g.order() > exact_soft_cap)
    throw too_large_error(std::string("instance too large for exact ") + what +
                          " (n = " + std::to_string(g.order()) + " > " +
                          std::to_string(exact_soft_cap) + ")");
}

std::optional<Optimum> solve_gamma(const Graph& g) {
  for (int k = 1; k <= g.order(); ++k) {
    std::optional<Optimum> found;
    for_each_subset_of_size(g.vertices(), k, [&](mask_t s) {
      if (is_dominating(g, s)) {
        found = Optimum{k, VertexSet{s}};
        return true;
      }
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;  // unreachable: V dominates
}

std::optional<Optimum> solve_iota(const Graph& g) {
  // independent dominating sets are exactly the maximal independent sets
  std::optional<Optimum> best;
  for_each_maximal_independent_set(g, [&](mask_t s) {
    int k = __builtin_popcountll(s);
    if (!best || k < best->value ||
        (k == best->value && s < best->witness.bits))
      best = Optimum{k, VertexSet{s}};
    return true;
  });
  return best;
}

std::optional<Optimum> solve_alpha(const Graph& g) {
  std::optional<Optimum> best;
  for_each_maximal_independent_set(g, [&](mask_t s) {
    int k = __builtin_popcountll(s);
    if (!best || k > best->value ||
        (k == best->value && s < best->witness.bits))
      best = Optimum{k, VertexSet{s}};
    return true;
  });
  return best;
}

std::optional<Optimum> solve_gamma_l(const Graph& g) {
  require_small(g, "gamma_l");
  const int n = g.order();
  for (int k = locating_lower_bound(n); k <= n; ++k) {
    std::optional<Optimum> found;
    for_each_subset_of_size(g.vertices(), k, [&](mask_t s) {
      if (traces_distinct(g, s)) {
        found = Optimum{k, VertexSet{s}};
        return true;
      }
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;  // unreachable: V is locating-dominating
}

std::optional<Optimum> solve_iota_l(const Graph& g) {
  require_small(g, "iota_l");
  IldVerdict v = is_ild_graph(g);
  if (!v.ild) return std::nullopt;
  const int n = g.order();
  const int ub = v.witness->size();
  for (int k = locating_lower_bound(n); k <= ub; ++k) {
    std::optional<Optimum> found;
    for_each_subset_of_size(g.vertices(), k, [&](mask_t s) {
      if (is_independent(g, s) && traces_distinct(g, s)) {
        found = Optimum{k, VertexSet{s}};
        return true;
      }
      return false;
    });
    if (found) return found;
  }
  return Optimum{ub, *v.witness};
}

}  // namespace

CheckFlags check(const Graph& g, VertexSet s) {
  if (s.bits & ~g.vertices())
    throw std::invalid_argument("set contains vertices outside the graph");
  CheckFlags f;
  f.dominating = is_dominating(g, s.bits);
  f.independent = is_independent(g, s.bits);
  f.locating_dominating = f.dominating && traces_distinct(g, s.bits);
  f.ild = f.independent && f.locating_dominating;
  return f;
}

void for_each_maximal_independent_set(const Graph& g,
                                      const std::function<bool(mask_t)>& f) {
  auto cadj = complement_adjacency(g);
  bool stopped = false;
  bron_kerbosch(cadj, 0, g.vertices(), 0, f, stopped);
}

std::optional<Optimum> parameter(const Graph& g, Param which) {
  switch (which) {
    case Param::Gamma:
      return solve_gamma(g);
    case Param::Iota:
      return solve_iota(g);
    case Param::GammaL:
      return solve_gamma_l(g);
    case Param::IotaL:
      return solve_iota_l(g);
    case Param::Alpha:
      return solve_alpha(g);
  }
  return std::nullopt;
}

ParameterReport parameters(const Graph& g) {
  ParameterReport r;
  auto gam = parameter(g, Param::Gamma);
  auto io = parameter(g, Param::Iota);
  auto gl = parameter(g, Param::GammaL);
  auto al = parameter(g, Param::Alpha);
  assert(gam && io && gl && al);
  r.gamma = gam->value;
  r.gamma_witness = gam->witness;
  r.iota = io->value;
  r.iota_witness = io->witness;
  r.gamma_l = gl->value;
  r.gamma_l_witness = gl->witness;
  r.alpha = al->value;
  r.alpha_witness = al->witness;
  if (auto il = parameter(g, Param::IotaL)) {
    r.iota_l = il->value;
    r.iota_l_witness = il->witness;
  }
  return r;
}

IldVerdict is_ild_graph(const Graph& g) {
  IldVerdict verdict;
  for_each_maximal_independent_set(g, [&](mask_t s) {
    ++verdict.maximal_sets_checked;
    if (traces_distinct(g, s)) {
      verdict.ild = true;
      verdict.witness = VertexSet{s};
      return false;
    }
    return true;
  });
  return verdict;
}

std::optional<AlphaBoundCertificate> non_ild_by_alpha_bound(const Graph& g) {
  auto al = parameter(g, Param::Alpha);
  assert(al);
  int k = al->value;
  if (k < 63 && static_cast<mask_t>(g.order()) >=
                    static_cast<mask_t>(k) + (mask_t{1} << k))
    return AlphaBoundCertificate{k};
  return std::nullopt;
}

VertexSet max_independent_girth5_ild(const Graph& g) {
  auto gi = girth(g);
  if (gi && *gi < 5)
    throw std::invalid_argument("girth must be at least 5 (got " +
                                std::to_string(*gi) + ")");
  auto al = parameter(g, Param::Alpha);
  assert(al);
  if (!check(g, al->witness).ild)
    throw std::logic_error(
        "maximum independent set failed the ILD check on a girth >= 5 graph");
  return al->witness;
}

std::optional<Optimum> min_ild_constrained(const Graph& g, int v,
                                           bool include) {
  require_small(g, "constrained iota_l");
  const int n = g.order();
  auto cadj = complement_adjacency(g);

  // existence + upper bound via the constrained maximal-set stream:
  // include: maximal independent sets containing v; exclude: maximal
  // independent sets of G - v, checked against the full graph
  std::optional<int> ub;
  bool stopped = false;
  auto probe = [&](mask_t s) {
    if (check(g, VertexSet{s}).ild) {
      int k = __builtin_popcountll(s);
      if (!ub || k < *ub) ub = k;
    }
    return true;
  };
  if (include)
    bron_kerbosch(cadj, bit(v), cadj[v], 0, probe, stopped);
  else
    bron_kerbosch(cadj, 0, g.vertices() & ~bit(v), 0, probe, stopped);
  if (!ub) return std::nullopt;

  mask_t universe = g.vertices() & ~bit(v);
  for (int k = std::max(1, locating_lower_bound(n)); k <= *ub; ++k) {
    const int free_picks = include ? k - 1 : k;
    if (free_picks < 0) continue;
    std::optional<Optimum> found;
    for_each_subset_of_size(universe, free_picks, [&](mask_t s) {
      mask_t full = include ? (s | bit(v)) : s;
      if (is_independent(g, full) && traces_distinct(g, full)) {
        found = Optimum{k, VertexSet{full}};
        return true;
      }
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;  // unreachable: ub witnesses existence
}

std::vector<VertexSet> maximum_independent_sets(const Graph& g) {
  auto al = parameter(g, Param::Alpha);
  assert(al);
  std::vector<VertexSet> out;
  for_each_maximal_independent_set(g, [&](mask_t s) {
    if (__builtin_popcountll(s) == al->value) out.push_back(VertexSet{s});
    return true;
  });
  std::sort(out.begin(), out.end(),
            [](VertexSet a, VertexSet b) { return a.bits < b.bits; });
  return out;
}

}  // namespace ildkit
