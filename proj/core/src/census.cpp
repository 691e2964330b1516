#include "ildkit/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cassert>
#include <chrono>
#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "ildkit/serialize.hpp"

namespace ildkit {

namespace {

// ---- canonical labeling ----------------------------------------------------

// Stable vertex coloring (degree refined by neighbor-color multisets until
// fixed). Color ids are rank-normalized, so they agree across isomorphic
// graphs.
std::array<int, canonical_cap> stable_colors(
    int n, const std::array<mask_t, canonical_cap>& adj) {
  std::array<int, canonical_cap> color{};
  for (int v = 0; v < n; ++v) color[v] = __builtin_popcountll(adj[v]);
  int classes = 0;
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<std::vector<int>, int>> keyed(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> key;
      key.push_back(color[v]);
      std::vector<int> nb;
      for (mask_t m = adj[v]; m; m &= m - 1)
        nb.push_back(color[__builtin_ctzll(m)]);
      std::sort(nb.begin(), nb.end());
      key.insert(key.end(), nb.begin(), nb.end());
      keyed[v] = {std::move(key), v};
    }
    std::vector<std::vector<int>> distinct;
    for (auto& [key, v] : keyed) distinct.push_back(key);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    for (auto& [key, v] : keyed)
      color[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), key) -
          distinct.begin());
    int now = static_cast<int>(distinct.size());
    if (now == classes) break;
    classes = now;
  }
  return color;
}

struct CanonSearch {
  int n = 0;
  std::array<mask_t, canonical_cap> adj{};
  std::array<int, canonical_cap> color{};
  std::array<int, canonical_cap> twin_root{};

  std::array<std::uint64_t, canonical_cap> best_code{};
  std::array<int, canonical_cap> best_perm{};
  bool have_best = false;
  std::uint64_t version = 0;

  std::array<std::uint64_t, canonical_cap> cur_code{};
  std::array<int, canonical_cap> cur_perm{};

  void run() { search(0, 0, {}, true); }

  void search(int pos, mask_t placed,
              std::array<std::uint32_t, canonical_cap> colbits,
              bool equal_prefix) {
    if (pos == n) {
      if (!have_best || !equal_prefix) {
        best_code = cur_code;
        best_perm = cur_perm;
        have_best = true;
        ++version;
      }
      return;
    }
    struct Cand {
      std::uint64_t key;
      int v;
    };
    std::array<Cand, canonical_cap> cands;
    int nc = 0;
    const mask_t rem = full_mask(n) & ~placed;
    for (mask_t m = rem; m; m &= m - 1) {
      int v = __builtin_ctzll(m);
      cands[nc++] = {(static_cast<std::uint64_t>(color[v]) << 32) | colbits[v],
                     v};
    }
    std::sort(cands.begin(), cands.begin() + nc,
              [](const Cand& a, const Cand& b) {
                return a.key != b.key ? a.key < b.key : a.v < b.v;
              });
    mask_t tried_roots = 0;
    for (int i = 0; i < nc; ++i) {
      const auto [key, v] = cands[i];
      if (tried_roots & bit(twin_root[v])) continue;  // twin already tried
      bool child_equal = equal_prefix;
      if (have_best && equal_prefix) {
        if (key > best_code[pos]) break;  // keys ascend: the rest lose too
        if (key < best_code[pos]) child_equal = false;
      }
      tried_roots |= bit(twin_root[v]);
      cur_perm[pos] = v;
      cur_code[pos] = key;
      auto next_bits = colbits;
      for (mask_t m = rem & ~bit(v); m; m &= m - 1) {
        int w = __builtin_ctzll(m);
        next_bits[w] = (next_bits[w] << 1) |
                       static_cast<std::uint32_t>((adj[v] >> w) & 1);
      }
      const std::uint64_t before = version;
      search(pos + 1, placed | bit(v), next_bits, child_equal);
      if (version != before) equal_prefix = true;  // prefix now matches best
    }
  }
};

int uf_find(std::array<int, canonical_cap>& p, int v) {
  while (p[v] != v) v = p[v] = p[p[v]];
  return v;
}

std::vector<int> canonical_positions(const Graph& g) {
  const int n = g.order();
  if (n > canonical_cap)
    throw too_large_error("canonical form capped at n = " +
                          std::to_string(canonical_cap));
  CanonSearch cs;
  cs.n = n;
  for (int v = 0; v < n; ++v) cs.adj[v] = g.neighbors(v);
  cs.color = stable_colors(n, cs.adj);

  std::array<int, canonical_cap> parent{};
  for (int v = 0; v < n; ++v) parent[v] = v;
  for (const TwinClass& cls : twin_classes(g).classes) {
    auto mem = cls.members.members();
    for (std::size_t i = 1; i < mem.size(); ++i) {
      int a = uf_find(parent, mem[0]), b = uf_find(parent, mem[i]);
      parent[b] = a;
    }
  }
  for (int v = 0; v < n; ++v) cs.twin_root[v] = uf_find(parent, v);

  cs.run();
  assert(cs.have_best);
  std::vector<int> position(n);
  for (int pos = 0; pos < n; ++pos) position[cs.best_perm[pos]] = pos;
  return position;
}

// ---- enumeration levels ----------------------------------------------------

struct KeyedGraphs {
  std::vector<std::string> keys;  // canonical forms, sorted
  std::vector<Graph> graphs;      // canonical representatives, same order
};

KeyedGraphs sort_and_store(std::vector<std::pair<std::string, Graph>> items) {
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  KeyedGraphs out;
  out.keys.reserve(items.size());
  out.graphs.reserve(items.size());
  for (auto& [k, g] : items) {
    out.keys.push_back(std::move(k));
    out.graphs.push_back(std::move(g));
  }
  return out;
}

Graph extend(const Graph& g, mask_t nbrs) {
  const int k = g.order();
  std::vector<mask_t> adj(k + 1, 0);
  for (int v = 0; v < k; ++v) adj[v] = g.neighbors(v);
  adj[k] = nbrs;
  for (mask_t m = nbrs; m; m &= m - 1) adj[__builtin_ctzll(m)] |= bit(k);
  return Graph::from_adjacency(std::move(adj));
}

// every isomorphism class on k+1 vertices arises by attaching a new
// minimum-degree vertex to some class on k vertices, so trying all parent
// classes with all neighborhoods of minimum degree covers everything;
// canonical-form deduplication keeps one representative each
std::vector<std::pair<std::string, Graph>> grow_level(
    const std::vector<Graph>& parents, int threads) {
  std::atomic<std::size_t> next{0};
  std::mutex merge_mu;
  std::unordered_set<std::string> seen;
  std::vector<std::pair<std::string, Graph>> out;

  auto work = [&]() {
    std::vector<std::pair<std::string, Graph>> local;
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= parents.size()) break;
      const Graph& g = parents[i];
      const int k = g.order();
      for (mask_t m = 0; m < (mask_t{1} << k); ++m) {
        const int newdeg = __builtin_popcountll(m);
        bool min_deg = true;
        for (int v = 0; v < k && min_deg; ++v)
          if (g.degree(v) + static_cast<int>((m >> v) & 1) < newdeg)
            min_deg = false;
        if (!min_deg) continue;
        Graph h = extend(g, m);
        Graph ch = canonical_graph(h);
        local.emplace_back(write_graph6(ch), std::move(ch));
      }
      if (local.size() >= 4096) {
        std::lock_guard<std::mutex> lk(merge_mu);
        for (auto& [key, gr] : local)
          if (seen.insert(key).second) out.emplace_back(key, std::move(gr));
        local.clear();
      }
    }
    std::lock_guard<std::mutex> lk(merge_mu);
    for (auto& [key, gr] : local)
      if (seen.insert(key).second) out.emplace_back(key, std::move(gr));
  };

  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return out;
}

const std::vector<Graph>& graph_level(int n) {
  static std::mutex mu;
  static std::map<int, KeyedGraphs> cache;
  std::lock_guard<std::mutex> lk(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second.graphs;
  if (cache.find(1) == cache.end()) {
    Graph k1 = Graph::build(1, {});
    cache[1] = sort_and_store({{write_graph6(k1), k1}});
  }
  for (int k = 2; k <= n; ++k) {
    if (cache.find(k) != cache.end()) continue;
    cache[k] = sort_and_store(grow_level(cache[k - 1].graphs, worker_count()));
  }
  return cache[n].graphs;
}

const std::vector<Graph>& tree_level(int n) {
  static std::mutex mu;
  static std::map<int, KeyedGraphs> cache;
  std::lock_guard<std::mutex> lk(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second.graphs;
  if (cache.find(1) == cache.end()) {
    Graph k1 = Graph::build(1, {});
    cache[1] = sort_and_store({{write_graph6(k1), k1}});
  }
  for (int k = 2; k <= n; ++k) {
    if (cache.find(k) != cache.end()) continue;
    std::vector<std::pair<std::string, Graph>> items;
    std::unordered_set<std::string> seen;
    for (const Graph& t : cache[k - 1].graphs) {
      for (int v = 0; v < t.order(); ++v) {
        Graph h = extend(t, bit(v));
        Graph ch = canonical_graph(h);
        std::string key = write_graph6(ch);
        if (seen.insert(key).second) items.emplace_back(key, std::move(ch));
      }
    }
    cache[k] = sort_and_store(std::move(items));
  }
  return cache[n].graphs;
}

const std::vector<Graph>& unicyclic_level(int n) {
  static std::mutex mu;
  static std::map<int, KeyedGraphs> cache;
  std::lock_guard<std::mutex> lk(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second.graphs;
  std::vector<std::pair<std::string, Graph>> items;
  std::unordered_set<std::string> seen;
  for (const Graph& t : tree_level(n)) {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (t.adjacent(u, v)) continue;
        std::vector<mask_t> adj(n);
        for (int w = 0; w < n; ++w) adj[w] = t.neighbors(w);
        adj[u] |= bit(v);
        adj[v] |= bit(u);
        Graph ch = canonical_graph(Graph::from_adjacency(std::move(adj)));
        std::string key = write_graph6(ch);
        if (seen.insert(key).second) items.emplace_back(key, std::move(ch));
      }
    }
  }
  cache[n] = sort_and_store(std::move(items));
  return cache[n].graphs;
}

}  // namespace

std::string canonical_form(const Graph& g) {
  return write_graph6(canonical_graph(g));
}

Graph canonical_graph(const Graph& g) {
  return g.relabeled(canonical_positions(g));
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

void enumerate_connected(int n, const std::function<void(const Graph&)>& f) {
  if (n < 1 || n > enumerate_connected_cap)
    throw too_large_error("built-in connected enumeration capped at n = " +
                          std::to_string(enumerate_connected_cap) +
                          "; supply an external graph6 stream beyond it");
  for (const Graph& g : graph_level(n))
    if (g.connected()) f(g);
}

void enumerate_trees(int n, const std::function<void(const Graph&)>& f) {
  if (n < 1 || n > enumerate_trees_cap)
    throw too_large_error("tree enumeration capped at n = " +
                          std::to_string(enumerate_trees_cap));
  for (const Graph& g : tree_level(n)) f(g);
}

void enumerate_unicyclic(int n, const std::function<void(const Graph&)>& f) {
  if (n < 3 || n > enumerate_unicyclic_cap)
    throw too_large_error("unicyclic enumeration capped at n = " +
                          std::to_string(enumerate_unicyclic_cap));
  for (const Graph& g : unicyclic_level(n)) f(g);
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  enumerate_connected(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> trees(int n) {
  std::vector<Graph> out;
  enumerate_trees(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> unicyclic_graphs(int n) {
  std::vector<Graph> out;
  enumerate_unicyclic(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> all_graph_classes(int n) {
  if (n < 1 || n > enumerate_connected_cap)
    throw too_large_error("graph-class enumeration capped at n = " +
                          std::to_string(enumerate_connected_cap));
  return graph_level(n);
}

CensusRecord classify(const Graph& g, bool with_parameters) {
  CensusRecord rec;
  rec.canonical = canonical_form(g);
  rec.n = g.order();
  rec.m = g.size();
  rec.twin_free = is_twin_free(g);
  rec.girth = girth(g);
  IldVerdict v = is_ild_graph(g);
  rec.ild = v.ild;
  rec.exhaustion_certificate = v.maximal_sets_checked;
  if (with_parameters) rec.params = parameters(g);
  return rec;
}

int worker_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("ILDKIT_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

namespace {

template <typename Item, typename Fn>
void parallel_for_each(const std::vector<Item>& items, int threads, Fn&& fn) {
  if (threads <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) fn(items[i], 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t]() {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= items.size()) break;
        fn(items[i], t);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

CensusResult non_ild_census(int n, const CensusFilters& filters,
                            const std::vector<Graph>* external, int threads) {
  const auto t0 = std::chrono::steady_clock::now();
  CensusResult res;
  res.n = n;
  res.filters = filters;
  const int nthreads = worker_count(threads);

  std::vector<Graph> own;
  const std::vector<Graph>* source = external;
  if (!source) {
    own = connected_graphs(n);
    source = &own;
  }

  std::mutex mu;
  std::atomic<std::uint64_t> enumerated{0}, count{0};
  std::vector<std::string> witnesses;
  std::atomic<bool> overflow{false};

  parallel_for_each(*source, nthreads, [&](const Graph& g, int) {
    if (filters.girth) {
      auto gi = girth(g);
      int want = *filters.girth;
      if (want == 0 ? gi.has_value() : (!gi || *gi != want)) return;
    }
    if (filters.twin_free && is_twin_free(g) != *filters.twin_free) return;
    enumerated.fetch_add(1);
    IldVerdict v = is_ild_graph(g);
    if (v.ild) return;
    count.fetch_add(1);
    std::lock_guard<std::mutex> lk(mu);
    if (witnesses.size() < census_witness_cap)
      witnesses.push_back(write_graph6(g));
    else
      overflow = true;
  });

  std::sort(witnesses.begin(), witnesses.end());
  res.total_enumerated = enumerated.load();
  res.count = count.load();
  res.witnesses_graph6 = std::move(witnesses);
  res.witness_overflow = overflow.load();
  res.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return res;
}

const std::vector<std::string>& registered_hypotheses() {
  static const std::vector<std::string> ids = {
      "iota_le_gammaL",
      "iotaL_le_2gammaL_minus_2",
      "iotaL_le_2gammaL_minus_3_strong_support",
      "iotaL_le_2gammaL_minus_3_twin_free",
      "iota_eq_gammaL",
  };
  return ids;
}

std::optional<HypothesisFamily> hypothesis_family_from_name(
    const std::string& name) {
  if (name == "trees") return HypothesisFamily::Trees;
  if (name == "unicyclic") return HypothesisFamily::Unicyclic;
  return std::nullopt;
}

HypothesisReport hypothesis_scan(HypothesisFamily family, int n_max,
                                 const std::string& id, int threads) {
  const auto& ids = registered_hypotheses();
  if (std::find(ids.begin(), ids.end(), id) == ids.end())
    throw std::invalid_argument("unknown hypothesis id '" + id + "'");

  HypothesisReport rep;
  rep.id = id;
  rep.family = family;
  rep.n_max = n_max;

  const bool equality_census = id == "iota_eq_gammaL";
  std::mutex mu;
  std::atomic<std::uint64_t> checked{0};
  std::atomic<bool> holds{true}, overflow{false};
  std::vector<std::string> witnesses;

  auto evaluate = [&](const Graph& g, int) {
    // the unicyclic statements are about twin-free instances only
    if (family == HypothesisFamily::Unicyclic && !is_twin_free(g)) return;
    const int n = g.order();

    bool applicable = true;
    bool violated = false;
    bool witness = false;
    if (id == "iota_le_gammaL") {
      auto io = parameter(g, Param::Iota);
      auto gl = parameter(g, Param::GammaL);
      violated = io->value > gl->value;
    } else if (id == "iotaL_le_2gammaL_minus_2") {
      applicable = n >= 3;
      if (applicable) {
        auto il = parameter(g, Param::IotaL);
        auto gl = parameter(g, Param::GammaL);
        applicable = il.has_value();
        if (applicable) violated = il->value > 2 * gl->value - 2;
      }
    } else if (id == "iotaL_le_2gammaL_minus_3_strong_support") {
      StructureSummary st = structure(g);
      bool has_big_support = false;
      for (int v : st.strong_supports.members())
        if (__builtin_popcountll(g.neighbors(v) & st.leaves.bits) >= 3)
          has_big_support = true;
      applicable = n >= 6 && has_big_support;
      if (applicable) {
        auto il = parameter(g, Param::IotaL);
        auto gl = parameter(g, Param::GammaL);
        applicable = il.has_value();
        if (applicable) violated = il->value > 2 * gl->value - 3;
      }
    } else if (id == "iotaL_le_2gammaL_minus_3_twin_free") {
      applicable = n >= 6 && is_twin_free(g);
      if (applicable) {
        auto il = parameter(g, Param::IotaL);
        auto gl = parameter(g, Param::GammaL);
        applicable = il.has_value();
        if (applicable) violated = il->value > 2 * gl->value - 3;
      }
    } else {  // iota_eq_gammaL: equality census, no claim
      auto io = parameter(g, Param::Iota);
      auto gl = parameter(g, Param::GammaL);
      witness = io->value == gl->value;
    }
    if (!applicable) return;
    checked.fetch_add(1);
    if (violated) holds = false;
    if (violated || (equality_census && witness)) {
      std::lock_guard<std::mutex> lk(mu);
      if (witnesses.size() < census_witness_cap)
        witnesses.push_back(write_graph6(g));
      else
        overflow = true;
    }
  };

  const int nthreads = worker_count(threads);
  const int n_min = family == HypothesisFamily::Trees ? 2 : 3;
  for (int n = n_min; n <= n_max; ++n) {
    const std::vector<Graph>& batch =
        family == HypothesisFamily::Trees ? trees(n) : unicyclic_graphs(n);
    parallel_for_each(batch, nthreads, evaluate);
  }

  std::sort(witnesses.begin(), witnesses.end());
  rep.holds = holds.load();
  rep.checked = checked.load();
  rep.witnesses_graph6 = std::move(witnesses);
  rep.witness_overflow = overflow.load();
  return rep;
}

}  // namespace ildkit
