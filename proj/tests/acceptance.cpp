// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Heavy enumerations are shared through the library's
// internal caches, so the order of criteria does not matter.
//
//   ildkit_acceptance [--criterion N] [--list]
//
// The order-10 girth-4 census is an extended-scale check: it runs only when
// ILDKIT_N10_G6 names a graph6 file with every connected graph of order 10
// (or at least the twin-free girth-4 ones).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "ildkit/census.hpp"
#include "ildkit/constructive.hpp"
#include "ildkit/exact.hpp"
#include "ildkit/families.hpp"
#include "ildkit/serialize.hpp"
#include "testutil.hpp"

using namespace ildkit;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& msg) {
    if (!cond) {
      pass = false;
      detail << "    FAILED: " << msg << "\n";
    }
  }
  void note(const std::string& msg) { detail << "    " << msg << "\n"; }
};

bool same(const Table1Row& expect, const ParameterReport& got) {
  return expect.gamma == got.gamma && expect.iota == got.iota &&
         expect.gamma_l == got.gamma_l && expect.iota_l == got.iota_l &&
         expect.alpha == got.alpha;
}

// 1. Table 1 closed forms, every admissible row with 3 <= n <= 12
void criterion1(Outcome& out) {
  int rows = 0;
  std::map<std::string, int> off_by_column;
  auto check_row = [&](FamilyKind kind, int n, int r, const Graph& g) {
    ++rows;
    Table1Row expect = table1_expected(kind, n, r);
    ParameterReport got = parameters(g);
    std::ostringstream name;
    name << family_kind_name(kind) << " n=" << n << (r ? " r=" : "")
         << (r ? std::to_string(r) : "");
    if (expect.gamma != got.gamma) ++off_by_column["gamma"];
    if (expect.iota != got.iota) ++off_by_column["iota"];
    if (expect.gamma_l != got.gamma_l) ++off_by_column["gamma_l"];
    if (expect.iota_l != got.iota_l) ++off_by_column["iota_l"];
    if (expect.alpha != got.alpha) ++off_by_column["alpha"];
    out.require(same(expect, got), name.str());
  };
  for (int n = 3; n <= 12; ++n) check_row(FamilyKind::Path, n, 0, path(n));
  for (int n = 4; n <= 12; ++n) check_row(FamilyKind::Cycle, n, 0, cycle(n));
  for (int n = 3; n <= 12; ++n)
    check_row(FamilyKind::Complete, n, 0, complete(n));
  for (int n = 3; n <= 12; ++n) check_row(FamilyKind::Star, n, 0, star(n));
  for (int n = 4; n <= 12; ++n)
    for (int r = 2; r <= n - r; ++r)
      check_row(FamilyKind::CompleteBipartite, n, r,
                complete_bipartite(r, n - r));
  for (int n = 7; n <= 12; ++n) check_row(FamilyKind::Wheel, n, 0, wheel(n));
  out.note("rows checked: " + std::to_string(rows));
  if (!off_by_column.empty()) {
    std::ostringstream cols;
    for (auto& [col, cnt] : off_by_column)
      cols << " " << col << "(" << cnt << ")";
    out.note("mismatched cells by column:" + cols.str() +
             "; every other cell agrees with the printed table");
  }
}

// 2. Non-ILD census counts
void criterion2(Outcome& out) {
  std::uint64_t upto5 = 0;
  std::vector<std::string> extra;
  for (int n = 1; n <= 5; ++n) {
    CensusResult r = non_ild_census(n, {});
    upto5 += r.count;
  }
  out.require(upto5 == 11,
              "orders <= 5: expected 11 non-ILD graphs, census finds " +
                  std::to_string(upto5));

  CensusFilters tf;
  tf.twin_free = true;
  CensusResult r6 = non_ild_census(6, tf);
  out.require(r6.count == 11,
              "twin-free order 6: expected 11, census finds " +
                  std::to_string(r6.count));
  bool all_girth3 = true;
  for (const std::string& w : r6.witnesses_graph6)
    if (girth(parse_graph6(w)) != 3) all_girth3 = false;
  out.require(all_girth3, "twin-free order-6 non-ILD graphs not all girth 3");

  // enumeration sanity anchors: the standard counts of connected graph
  // classes (any miss here would invalidate every census above)
  out.require(connected_graphs(7).size() == 853, "853 classes at n=7");
  out.require(connected_graphs(8).size() == 11117, "11117 classes at n=8");
  out.require(connected_graphs(9).size() == 261080, "261080 classes at n=9");

  CensusFilters g4;
  g4.twin_free = true;
  g4.girth = 4;
  for (int n = 4; n <= 8; ++n) {
    CensusResult r = non_ild_census(n, g4);
    out.require(r.count == 0, "twin-free girth-4 order " + std::to_string(n) +
                                  ": expected 0, got " +
                                  std::to_string(r.count));
  }
  CensusResult r9 = non_ild_census(9, g4);
  out.require(r9.count == 1, "twin-free girth-4 order 9: expected 1, got " +
                                 std::to_string(r9.count));
  if (r9.count >= 1)
    out.note("order-9 witness: " + r9.witnesses_graph6.front());
  out.note("order-9 classification time: " + std::to_string(r9.runtime_ms) +
           " ms over " + std::to_string(r9.total_enumerated) +
           " filtered graphs");

  if (const char* path = std::getenv("ILDKIT_N10_G6")) {
    std::ifstream in(path, std::ios::binary);
    if (in) {
      std::vector<Graph> ext = read_graph6_stream(in);
      CensusResult r10 = non_ild_census(10, g4, &ext);
      out.require(r10.count == 5,
                  "twin-free girth-4 order 10 (external): expected 5, got " +
                      std::to_string(r10.count));
      out.note("order-10 extended check: count " + std::to_string(r10.count) +
               " over " + std::to_string(ext.size()) + " external graphs");
    } else {
      out.note("ILDKIT_N10_G6 set but unreadable; extended check skipped");
    }
  } else {
    out.note("order-10 extended check gated off (set ILDKIT_N10_G6)");
  }
}

// 3. The split-family equality iota = 2^(gamma_l - 1)
void criterion3(Outcome& out) {
  ParameterReport g2 = parameters(gamma_r(2));
  ParameterReport g3 = parameters(gamma_r(3));
  out.require(g2.gamma_l == 2, "gamma_l(Gamma_2) = 2");
  out.require(g3.gamma_l == 3, "gamma_l(Gamma_3) = 3");
  out.require(g2.iota == 3, "iota(Gamma_2) = 3 as published; solver finds " +
                                std::to_string(g2.iota));
  out.require(g3.iota == 7, "iota(Gamma_3) = 7 as published; solver finds " +
                                std::to_string(g3.iota));
  out.require(g2.iota == (1 << (g2.gamma_l - 1)),
              "Gamma_2 equality iota = 2^(gamma_l - 1)");
  out.require(g3.iota == (1 << (g3.gamma_l - 1)),
              "Gamma_3 equality iota = 2^(gamma_l - 1)");
  out.note("computed: iota(Gamma_2)=" + std::to_string(g2.iota) +
           ", iota(Gamma_3)=" + std::to_string(g3.iota) +
           "; the equality iota = 2^(gamma_l - 1) holds with these values");
}

// 4. Tree bounds, exhaustive over all trees n <= 12
void criterion4(Outcome& out) {
  std::uint64_t checked = 0;
  for (int n = 2; n <= 12; ++n) {
    enumerate_trees(n, [&](const Graph& t) {
      ++checked;
      auto io = parameter(t, Param::Iota);
      auto gl = parameter(t, Param::GammaL);
      auto il = parameter(t, Param::IotaL);
      if (!il) {
        out.require(false, "tree without ILD-set?! " + write_graph6(t));
        return;
      }
      out.require(io->value <= gl->value,
                  "iota <= gamma_l fails on " + write_graph6(t));
      out.require(gl->value <= il->value,
                  "gamma_l <= iota_l fails on " + write_graph6(t));
      if (n >= 3)
        out.require(il->value <= 2 * gl->value - 2,
                    "iota_l <= 2 gamma_l - 2 fails on " + write_graph6(t));
      if (n >= 6) {
        StructureSummary st = structure(t);
        bool big_support = false;
        for (int v : st.strong_supports.members())
          if (__builtin_popcountll(t.neighbors(v) & st.leaves.bits) >= 3)
            big_support = true;
        if (big_support)
          out.require(il->value <= 2 * gl->value - 3,
                      "strong-support bound fails on " + write_graph6(t));
        if (is_twin_free(t))
          out.require(il->value <= 2 * gl->value - 3,
                      "twin-free bound fails on " + write_graph6(t));
      }
    });
  }
  out.note("trees checked: " + std::to_string(checked));
}

// 5. Path values and the order-6 anomaly
void criterion5(Outcome& out) {
  for (int n = 2; n <= 15; ++n) {
    auto il = parameter(path(n), Param::IotaL);
    int expect = (2 * n + 4) / 5;
    out.require(il && il->value == expect,
                "iota_l(P_" + std::to_string(n) + ") != ceil(2n/5)");
  }
  int anomalies = 0;
  std::string witness;
  enumerate_trees(6, [&](const Graph& t) {
    auto gl = parameter(t, Param::GammaL);
    auto il = parameter(t, Param::IotaL);
    if (il->value == 4 && gl->value == 3) {
      ++anomalies;
      witness = write_graph6(t);
    } else {
      out.require(il->value == gl->value,
                  "order-6 tree with unexpected gap: " + write_graph6(t));
    }
  });
  out.require(anomalies == 1, "expected exactly one order-6 anomaly, found " +
                                  std::to_string(anomalies));
  if (anomalies == 1) out.note("anomalous tree: " + witness);
}

// 6. Realization regions
void criterion6(Outcome& out) {
  for (int r = 2; r <= 4; ++r) {
    for (int s = r; s <= 2 * r - 2; ++s) {
      Graph t = fig5_tree(2 * r - s, r);
      auto gl = parameter(t, Param::GammaL);
      auto il = parameter(t, Param::IotaL);
      out.require(gl->value == r && il && il->value == s,
                  "spider(h=" + std::to_string(2 * r - s) +
                      ",k=" + std::to_string(r) + ") misses (" +
                      std::to_string(r) + "," + std::to_string(s) + ")");
    }
    for (int s = r; s <= 2 * r - 3; ++s) {
      try {
        Realization real =
            realization_search(r, s, RealizationRegion::TwinFreeTree);
        out.require(real.gamma_l == r && real.iota_l == s &&
                        is_twin_free(real.witness),
                    "twin-free realization check for (" + std::to_string(r) +
                        "," + std::to_string(s) + ")");
        out.note("twin-free (" + std::to_string(r) + "," + std::to_string(s) +
                 "): " + write_graph6(real.witness) +
                 " n=" + std::to_string(real.witness.order()));
      } catch (const std::exception& e) {
        out.require(false, std::string("realization search: ") + e.what());
      }
    }
  }
}

// 7. Oracle-guarded constructions
void criterion7(Outcome& out) {
  std::uint64_t tree_total = 0, tree_fallback = 0, tree_attains = 0;
  for (int n = 2; n <= 12; ++n) {
    enumerate_trees(n, [&](const Graph& t) {
      ++tree_total;
      ConstructionResult r = tree_ild(t);
      out.require(r.verified && check(t, r.set).ild,
                  "tree construction unverified on " + write_graph6(t));
      if (r.method == Method::FallbackExact) ++tree_fallback;
      if (r.set.size() == parameter(t, Param::IotaL)->value) ++tree_attains;
    });
  }
  out.note("trees: " + std::to_string(tree_total - tree_fallback) + "/" +
           std::to_string(tree_total) + " handled without exact fallback");
  out.note("trees: " + std::to_string(tree_attains) + "/" +
           std::to_string(tree_total) +
           " outputs attain the exact iota_l (diagnostic; the construction "
           "promises validity, not minimality)");

  std::uint64_t uni_total = 0, uni_fallback = 0, girth3 = 0;
  for (int n = 3; n <= 10; ++n) {
    enumerate_unicyclic(n, [&](const Graph& g) {
      if (!is_twin_free(g)) return;
      ++uni_total;
      ConstructionResult r = unicyclic_ild(g);
      out.require(r.verified && check(g, r.set).ild,
                  "unicyclic construction unverified on " + write_graph6(g));
      auto gi = girth(g);
      if (*gi >= 4)
        out.require(r.method != Method::FallbackExact,
                    "girth >= 4 needed exact fallback on " + write_graph6(g));
      else {
        ++girth3;
        out.require(r.method == Method::NineCase,
                    "girth-3 assembly did not verify on " + write_graph6(g));
      }
      if (r.method == Method::FallbackExact) ++uni_fallback;
    });
  }
  out.note("twin-free unicyclic: " +
           std::to_string(uni_total - uni_fallback) + "/" +
           std::to_string(uni_total) +
           " without exact fallback (girth-3 cases: " +
           std::to_string(girth3) + ")");
}

// 8. Girth >= 5: every maximum independent set is an ILD-set
void criterion8(Outcome& out) {
  std::uint64_t sets_checked = 0;
  auto check_graph = [&](const Graph& g, const std::string& name) {
    for (const VertexSet& s : maximum_independent_sets(g)) {
      ++sets_checked;
      out.require(check(g, s).ild,
                  "maximum independent set not ILD on " + name);
    }
  };
  for (int n = 5; n <= 12; ++n)
    check_graph(cycle(n), "C_" + std::to_string(n));
  check_graph(testutil::petersen(), "Petersen");
  for (int n = 1; n <= 9; ++n) {
    enumerate_connected(n, [&](const Graph& g) {
      auto gi = girth(g);
      if (gi && *gi < 5) return;
      check_graph(g, write_graph6(g));
    });
  }
  out.note("maximum independent sets checked: " +
           std::to_string(sets_checked));
}

// 9. iota <= 2^(gamma_l - 1) for every connected graph n <= 7
void criterion9(Outcome& out) {
  std::uint64_t checked = 0;
  for (int n = 1; n <= 7; ++n) {
    enumerate_connected(n, [&](const Graph& g) {
      ++checked;
      auto io = parameter(g, Param::Iota);
      auto gl = parameter(g, Param::GammaL);
      out.require(io->value <= (1 << (gl->value - 1)),
                  "iota > 2^(gamma_l - 1) on " + write_graph6(g));
    });
  }
  out.note("graphs checked: " + std::to_string(checked));
}

// 10. The alpha-bound certificate never disagrees with exhaustion
void criterion10(Outcome& out) {
  std::uint64_t fired = 0;
  for (int n = 1; n <= 7; ++n) {
    enumerate_connected(n, [&](const Graph& g) {
      auto cert = non_ild_by_alpha_bound(g);
      if (!cert) return;
      ++fired;
      out.require(!is_ild_graph(g).ild,
                  "alpha-bound fired on an ILD graph: " + write_graph6(g));
    });
  }
  out.note("certificates fired: " + std::to_string(fired));
}

}  // namespace

int main(int argc, char** argv) {
  std::map<int, std::pair<std::string, std::function<void(Outcome&)>>> table =
      {
          {1, {"Table 1 closed forms (3 <= n <= 12)", criterion1}},
          {2, {"non-ILD census counts", criterion2}},
          {3, {"Gamma_r equality family", criterion3}},
          {4, {"tree bounds, exhaustive n <= 12", criterion4}},
          {5, {"path formula and order-6 anomaly", criterion5}},
          {6, {"realization regions (r <= 4)", criterion6}},
          {7, {"oracle-guarded constructions", criterion7}},
          {8, {"girth >= 5 maximum independent sets", criterion8}},
          {9, {"general bound iota <= 2^(gamma_l - 1), n <= 7", criterion9}},
          {10, {"alpha-bound certificate agreement, n <= 7", criterion10}},
      };

  int only = 0;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) only = std::atoi(argv[++i]);
    if (arg == "--list") {
      for (auto& [id, entry] : table)
        std::cout << id << ": " << entry.first << "\n";
      return 0;
    }
  }

  int failed = 0;
  for (auto& [id, entry] : table) {
    if (only && id != only) continue;
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    entry.second(out);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cout << (out.pass ? "[PASS]" : "[FAIL]") << " criterion " << id
              << ": " << entry.first << " (" << ms << " ms)\n";
    std::string detail = out.detail.str();
    if (!detail.empty()) std::cout << detail;
    if (!out.pass) ++failed;
  }
  if (failed) {
    std::cout << failed << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
