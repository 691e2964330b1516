#pragma once

#include <optional>
#include <string>

#include "ildkit/exact.hpp"
#include "ildkit/graph.hpp"

namespace ildkit {

enum class Method {
  Algo1,           // tree construction: twin-leaf elimination + 2-coloring
  Algo2Literal,    // unicyclic: union of C0 classes over a cycle MIS
  Algo2Completed,  // literal plus the C1 classes of the unselected trees
  NineCase,        // girth-3 unicyclic triangle-profile assembly
  StableSide,      // one stable part of a twin-free bipartite graph
  MaxIndependent,  // maximum independent set (girth >= 5 route)
  FallbackExact,   // exact solver stepped in
};

std::string method_name(Method m);

struct ConstructionResult {
  VertexSet set;
  bool verified = false;  // always true on return: the checker is the gate
  Method method = Method::FallbackExact;
};

// Tree construction: while a class of >= 2 twin leaves hangs from a support
// u, move the leaves into S and delete them with u; then 2-color each
// remaining component and add its smaller color class (ties: the class with
// the smaller minimum vertex). Output is checked; on failure the exact
// solver supplies a minimum ILD-set instead.
ConstructionResult tree_ild(const Graph& t);

// One stable part of a connected bipartite graph: the part containing v
// (include=true) or the other part. Checked; falls back to a constrained
// exact search when the stable side is not an ILD-set (possible only with
// twins). Throws std::invalid_argument when not bipartite, std::runtime_error
// when even the constrained search finds nothing.
ConstructionResult stable_side_ild(const Graph& g, int v, bool include);

// Twin-free unicyclic graph with girth 3: classifies the triangle's degree
// profile into nine cases and assembles the set from constrained ILD-sets of
// the branching trees; when the prescribed pattern cannot be completed or
// fails the check, nearby constraint patterns are tried before the exact
// fallback.
ConstructionResult unicyclic_ild_girth3(const Graph& g);

// Twin-free unicyclic dispatch: girth >= 5 -> maximum independent set;
// girth 4 -> stable side of the bipartition; girth 3 -> nine-case assembly.
ConstructionResult unicyclic_ild(const Graph& g);

// Diagnostic mode mirroring the cycle-and-color construction as published:
// 2-color every branching tree (class C0 holding the cycle vertex), and for
// each maximal independent set I of the cycle check the candidate
// union of C0 over I, plus the completed variant that adds the C1 classes of
// the trees outside I. Returns the smallest verified candidate (literal
// preferred on ties), exact fallback when none verifies.
ConstructionResult unicyclic_ild_algo2(const Graph& g);

}  // namespace ildkit
