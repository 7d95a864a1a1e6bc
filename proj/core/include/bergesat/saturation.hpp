#pragma once

#include "bergesat/berge.hpp"
#include "bergesat/graph.hpp"
#include "bergesat/hypergraph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bergesat {

/// Direct check of the saturation definition: h is Berge-g free and adding
/// any absent hyperedge creates a Berge copy.
struct SaturationReport {
  bool is_free = false;
  /// Absent edges whose addition creates no Berge copy (canonical ascending order).
  std::vector<VertexSet> failing_edges;
  /// For every other absent edge e, a witness valid against (g, add_edge(h, e)).
  std::vector<std::pair<VertexSet, BergeWitness>> witness_per_edge;
  bool is_saturated = false;
};

/// Requires host at least as large as the pattern and n(h) <= 12 so the
/// closure enumeration stays feasible.
SaturationReport saturation_report(const Graph& g, const Hypergraph& h);

struct SearchStats {
  long long enumerated = 0;         // candidate hyperedge sets generated
  long long isomorph_rejected = 0;  // skipped as non-canonical
  long long examined = 0;           // saturation-checked
};

struct SatResult {
  int value;
  Hypergraph witness;  // a saturated hypergraph with `value` hyperedges
  SearchStats stats;
};

/// Exact saturation number on the ground set {1..n}, n <= 6: exhaustive
/// search over m-subsets of the candidate hyperedges for m ascending from
/// |E(g)| - 1 (the pigeonhole lower bound), candidates in canonical listing
/// order, isomorph-rejected against all vertex permutations. The first
/// accepted candidate is returned. `threads` caps worker threads per level;
/// the result does not depend on it (stats counters may).
SatResult sat_number(const Graph& g, int n, int m_cap, int threads = 1);

/// Same with the default cap |E(g)| + 1.
SatResult sat_number(const Graph& g, int n);

struct TheoremRow {
  Graph graph;  // class representative
  int predicted = 0;
  int computed = 0;
  bool agree = false;
  std::string construction;  // which witness family was verified
  bool construction_saturated = false;
};

/// predicted_sat vs sat_number for every isomorphism class from
/// enumerate_graphs(n_max, e_max), evaluated on n = |V(g)|, plus verification
/// that the matching witness construction is saturated. Feasible up to
/// n_max = 5, e_max = 6.
std::vector<TheoremRow> theorem_check(int n_max, int e_max, int threads = 1);

/// True iff no hypergraph on {1..n} with exactly t-2 hyperedges is saturated
/// for the star on t vertices, established by exhaustive enumeration with
/// isomorph rejection. Supported: t = 5, n in {5, 6}.
bool lemma_lower_bound_check(int t, int n);

}  // namespace bergesat
