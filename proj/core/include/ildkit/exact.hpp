#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "ildkit/graph.hpp"

namespace ildkit {

// Size cap for the exponential-enumeration parameters gamma_l / iota_l.
inline constexpr int exact_soft_cap = 20;

struct CheckFlags {
  bool dominating = false;
  bool independent = false;
  bool locating_dominating = false;
  bool ild = false;
};

// Property flags of a candidate set: domination, independence, and
// locating-domination (all traces N(v) & S for v outside S nonempty and
// pairwise distinct).
CheckFlags check(const Graph& g, VertexSet s);

enum class Param { Gamma, Iota, GammaL, IotaL, Alpha };

struct Optimum {
  int value = 0;
  VertexSet witness;
};

// Exact value and one optimal witness. Minimization parameters enumerate
// subsets in ascending cardinality; Alpha and Iota go through maximal
// independent sets. Returns nullopt only for IotaL on a non-ILD graph.
// Throws too_large_error beyond exact_soft_cap for GammaL / IotaL.
std::optional<Optimum> parameter(const Graph& g, Param which);

struct ParameterReport {
  int gamma = 0, iota = 0, gamma_l = 0, alpha = 0;
  std::optional<int> iota_l;  // absent <=> no ILD-set exists
  VertexSet gamma_witness, iota_witness, gamma_l_witness, alpha_witness;
  std::optional<VertexSet> iota_l_witness;
  bool ild_graph() const { return iota_l.has_value(); }
};

ParameterReport parameters(const Graph& g);

struct IldVerdict {
  bool ild = false;
  std::optional<VertexSet> witness;
  // number of maximal independent sets examined; when ild is false this is
  // the exhaustion certificate (every maximal independent set was checked)
  std::uint64_t maximal_sets_checked = 0;
};

// ILD existence. It suffices to scan maximal independent sets: an ILD-set
// extends to a maximal independent set, which stays dominating, and a
// dominating superset of a locating set stays locating (its traces restrict
// to the original ones). Tested against full subset enumeration for n <= 7.
IldVerdict is_ild_graph(const Graph& g);

struct AlphaBoundCertificate {
  int alpha = 0;  // n >= alpha + 2^alpha held
};

// The counting certificate for non-ILD graphs: a locating set of size k
// tells apart at most 2^k - 1 outsiders, so n >= alpha + 2^alpha rules out
// every independent candidate. nullopt = inconclusive.
std::optional<AlphaBoundCertificate> non_ild_by_alpha_bound(const Graph& g);

// For girth >= 5 a maximum independent set is always an ILD-set; returns one
// (checked). Throws std::invalid_argument when girth < 5.
VertexSet max_independent_girth5_ild(const Graph& g);

// Enumerates all maximal independent sets (Bron-Kerbosch with pivoting on
// the complement). Return false from the callback to stop early.
void for_each_maximal_independent_set(const Graph& g,
                                      const std::function<bool(mask_t)>& f);

// Minimum ILD-set with vertex v forced inside (include=true) or outside.
std::optional<Optimum> min_ild_constrained(const Graph& g, int v,
                                           bool include);

// All maximum independent sets (every one is maximal, so the BK stream
// filtered by cardinality alpha).
std::vector<VertexSet> maximum_independent_sets(const Graph& g);

}  // namespace ildkit
