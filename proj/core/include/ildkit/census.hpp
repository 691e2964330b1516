#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ildkit/exact.hpp"
#include "ildkit/graph.hpp"

namespace ildkit {

inline constexpr int canonical_cap = 16;
inline constexpr int enumerate_connected_cap = 9;
inline constexpr int enumerate_trees_cap = 13;
inline constexpr int enumerate_unicyclic_cap = 11;

// Canonical form: the graph6 line of the canonically relabeled graph. Equal
// strings <=> isomorphic graphs (cross-validated against brute-force
// isomorphism for n <= 6). Backtracking over vertex orders with stable-color
// and twin-class pruning; n <= 16.
std::string canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

// One canonically labeled representative per isomorphism class, emitted in
// canonical-form order. Built-in generation by vertex augmentation with
// canonical deduplication.
void enumerate_connected(int n, const std::function<void(const Graph&)>& f);
void enumerate_trees(int n, const std::function<void(const Graph&)>& f);
void enumerate_unicyclic(int n, const std::function<void(const Graph&)>& f);

std::vector<Graph> connected_graphs(int n);
std::vector<Graph> trees(int n);
std::vector<Graph> unicyclic_graphs(int n);

// All isomorphism classes on exactly n vertices, disconnected included
// (the augmentation levels; exposed for tests).
std::vector<Graph> all_graph_classes(int n);

struct CensusRecord {
  std::string canonical;
  int n = 0, m = 0;
  bool twin_free = false;
  std::optional<int> girth;  // absent = acyclic
  bool ild = false;
  std::uint64_t exhaustion_certificate = 0;  // maximal sets checked when !ild
  std::optional<ParameterReport> params;
};

CensusRecord classify(const Graph& g, bool with_parameters = false);

struct CensusFilters {
  std::optional<bool> twin_free;
  std::optional<int> girth;  // exact match; 0 = acyclic
};

inline constexpr int census_witness_cap = 1000;

struct CensusResult {
  int n = 0;
  CensusFilters filters;
  std::uint64_t total_enumerated = 0;  // graphs passing the filters
  std::uint64_t count = 0;             // non-ILD graphs among them
  std::vector<std::string> witnesses_graph6;
  bool witness_overflow = false;
  std::int64_t runtime_ms = 0;
};

// Classifies every connected graph of order n (built-in generation, or the
// external list when given) and counts the non-ILD ones passing the filters.
// threads = 0 picks ILDKIT_THREADS or the hardware count.
CensusResult non_ild_census(int n, const CensusFilters& filters,
                            const std::vector<Graph>* external = nullptr,
                            int threads = 0);

// ---- hypothesis harness ---------------------------------------------------

enum class HypothesisFamily { Trees, Unicyclic };

std::optional<HypothesisFamily> hypothesis_family_from_name(
    const std::string& name);

struct HypothesisReport {
  std::string id;
  HypothesisFamily family = HypothesisFamily::Trees;
  int n_max = 0;
  bool holds = true;
  std::uint64_t checked = 0;
  // counterexamples for bound hypotheses; equality witnesses for the
  // iota = gamma_l census (which asserts nothing)
  std::vector<std::string> witnesses_graph6;
  bool witness_overflow = false;
};

// Registered hypothesis ids:
//   iota_le_gammaL                       iota <= gamma_l
//   iotaL_le_2gammaL_minus_2             iota_l <= 2 gamma_l - 2 (n >= 3)
//   iotaL_le_2gammaL_minus_3_strong_support
//       iota_l <= 2 gamma_l - 3 for trees of order >= 6 containing a strong
//       support vertex with at least 3 leaf neighbors
//   iotaL_le_2gammaL_minus_3_twin_free   same bound, twin-free, order >= 6
//   iota_eq_gammaL                       equality census (collects witnesses)
// On the Unicyclic family every hypothesis restricts to twin-free instances.
const std::vector<std::string>& registered_hypotheses();

HypothesisReport hypothesis_scan(HypothesisFamily family, int n_max,
                                 const std::string& id, int threads = 0);

int worker_count(int requested = 0);  // resolves ILDKIT_THREADS / hardware

}  // namespace ildkit
