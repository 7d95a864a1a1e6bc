#pragma once

#include "bergesat/vertex_set.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace bergesat {

/// Unordered edge, normalized so that first < second.
using Edge = std::pair<Vertex, Vertex>;

inline VertexSet edge_set(Edge e) { return VertexSet::of({e.first, e.second}); }

/// Labeled simple graph on the ground set {1..n}: no loops, no duplicates.
/// Isolated vertices may be present in a value; the classification and
/// containment operations reject them where the theory requires.
class Graph {
 public:
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  int degree(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;
  bool has_isolated_vertex() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_;
  std::vector<Edge> edges_;  // sorted lexicographically, u < v within each pair
};

enum class GraphClassTag { StarWithAtLeast4Edges, Other };

/// Case split used by the saturation theorem. `center` is populated whenever
/// the graph is a star, regardless of the tag.
struct GraphClass {
  GraphClassTag tag = GraphClassTag::Other;
  std::optional<Vertex> center;
};

int max_degree(const Graph& g);

/// Center of the star formed by the edge set, if the edges share a common
/// vertex; for a single edge, the smaller endpoint. Throws on an empty edge
/// set.
std::optional<Vertex> is_star(const Graph& g);

/// Smallest vertex cover of size <= 2, lexicographically least among minimum
/// covers; nullopt when every cover needs three or more vertices. An empty
/// edge set has the empty cover.
std::optional<std::vector<Vertex>> has_vertex_cover_le2(const Graph& g);

/// Distinct (a, b), a < b, covering every edge of a non-star graph with at
/// least two edges -- i.e. g is an edge-disjoint union of two non-empty stars
/// centered at a and b. Lexicographically least such pair; nullopt otherwise.
std::optional<std::pair<Vertex, Vertex>> is_two_star_union(const Graph& g);

/// Requires at least one edge and no isolated vertices.
GraphClass classify_for_theorem(const Graph& g);

/// Saturation number the theorem predicts: |E| for stars with >= 4 edges,
/// |E| - 1 otherwise.
int predicted_sat(const Graph& g);

/// One representative per isomorphism class of graphs with no isolated
/// vertices, 2 <= |V| <= n_max and 1 <= |E| <= e_max. Representatives are
/// lexicographically least under the edge-set bit encoding (bit i = i-th pair
/// in lexicographic order); output is sorted by (|V|, |E|, encoding).
std::vector<Graph> enumerate_graphs(int n_max, int e_max);

}  // namespace bergesat
