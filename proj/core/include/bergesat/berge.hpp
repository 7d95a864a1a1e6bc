#pragma once

#include "bergesat/graph.hpp"
#include "bergesat/hypergraph.hpp"
#include "bergesat/matching.hpp"

#include <optional>
#include <vector>

namespace bergesat {

/// Certificate that h contains a Berge copy of g: an injective embedding of
/// the pattern vertices plus an injective assignment of pattern edges to
/// hyperedges, each embedded edge a subset of its hyperedge.
/// vertex_map[v-1] hosts pattern vertex v; edge_assignment[i] is the
/// hyperedge index assigned to g.edges()[i].
struct BergeWitness {
  std::vector<Vertex> vertex_map;
  std::vector<int> edge_assignment;
};

/// Deterministic backtracking search: pattern vertices in descending-degree
/// order (ties by label), host candidates in ascending label, pruned by a
/// bipartite matching test on the already-embedded edges. The pattern must
/// have no isolated vertices; a pattern larger than the host is simply not
/// contained.
std::optional<BergeWitness> contains_berge(const Graph& g, const Hypergraph& h);

/// Reference decision procedure: enumerate every injective vertex map and
/// every injective edge assignment outright, no matching, no pruning.
/// Bounds: |V(g)| <= 7, |E(g)| <= 6, at most 8 hyperedges.
std::optional<BergeWitness> contains_berge_oracle(const Graph& g, const Hypergraph& h);

/// True iff the witness is structurally well-formed, both maps are injective,
/// and every embedded edge lies inside its assigned hyperedge.
bool validate_witness(const Graph& g, const Hypergraph& h, const BergeWitness& w);

/// Perfect-matching certificate between E(g) - removed_edge and the members
/// of hprime, with adjacency = disjointness. Perfect means the complements of
/// hprime contain a Berge copy of g - removed_edge.
MatchingResult certificate_condition_iii(const Graph& g, Edge removed_edge,
                                         const SetSystem& hprime);

}  // namespace bergesat
