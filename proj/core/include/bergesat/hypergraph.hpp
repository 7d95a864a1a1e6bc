#pragma once

#include "bergesat/vertex_set.hpp"

#include <vector>

namespace bergesat {

/// Hypergraph on {1..n} with distinct hyperedges of size >= 2, kept in
/// canonical listing order: descending size, then descending lexicographic.
class Hypergraph {
 public:
  Hypergraph(int n, std::vector<VertexSet> hyperedges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(hyperedges_.size()); }
  const std::vector<VertexSet>& hyperedges() const { return hyperedges_; }
  bool contains_edge(VertexSet e) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_;
  std::vector<VertexSet> hyperedges_;
};

/// Family of distinct subsets of {1..n}; empty sets and singletons allowed.
/// Members are kept in ascending (size, lexicographic) order.
class SetSystem {
 public:
  SetSystem(int n, std::vector<VertexSet> members);

  int vertex_count() const { return n_; }
  int member_count() const { return static_cast<int>(members_.size()); }
  const std::vector<VertexSet>& members() const { return members_; }

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

 private:
  int n_;
  std::vector<VertexSet> members_;
};

/// Copy of h with e inserted at its canonical position. Rejects sets of size
/// < 2 and edges already present.
Hypergraph add_edge(const Hypergraph& h, VertexSet e);

/// The hypergraph { {1..n} \ E : E in members(s) }. Every complement must
/// have size >= 2.
Hypergraph complement_system(const SetSystem& s);

/// All subsets of size >= 2 absent from h, in ascending (size, lexicographic)
/// order. Requires n <= 20.
std::vector<VertexSet> absent_edges(const Hypergraph& h);

/// Number of hyperedges containing v.
int degree(const Hypergraph& h, Vertex v);

}  // namespace bergesat
