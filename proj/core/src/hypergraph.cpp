#include "bergesat/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace bergesat {

Hypergraph::Hypergraph(int n, std::vector<VertexSet> hyperedges)
    : n_(n), hyperedges_(std::move(hyperedges)) {
  if (n < 1 || n > kMaxGroundSetSize) throw std::invalid_argument("ground set size out of range");
  const VertexSet ground = VertexSet::full(n_);
  for (VertexSet e : hyperedges_) {
    if (!e.subset_of(ground)) throw std::invalid_argument("hyperedge outside ground set");
    if (e.size() < 2) throw std::invalid_argument("hyperedge too small");
  }
  std::sort(hyperedges_.begin(), hyperedges_.end(), hyperedge_canonical_less);
  if (std::adjacent_find(hyperedges_.begin(), hyperedges_.end()) != hyperedges_.end())
    throw std::invalid_argument("duplicate hyperedge");
}

bool Hypergraph::contains_edge(VertexSet e) const {
  return std::binary_search(hyperedges_.begin(), hyperedges_.end(), e, hyperedge_canonical_less);
}

SetSystem::SetSystem(int n, std::vector<VertexSet> members) : n_(n), members_(std::move(members)) {
  if (n < 1 || n > kMaxGroundSetSize) throw std::invalid_argument("ground set size out of range");
  const VertexSet ground = VertexSet::full(n_);
  for (VertexSet e : members_)
    if (!e.subset_of(ground)) throw std::invalid_argument("member outside ground set");
  std::sort(members_.begin(), members_.end(), subset_canonical_less);
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw std::invalid_argument("duplicate member");
}

Hypergraph add_edge(const Hypergraph& h, VertexSet e) {
  if (!e.subset_of(VertexSet::full(h.vertex_count())))
    throw std::invalid_argument("hyperedge outside ground set");
  if (e.size() < 2) throw std::invalid_argument("hyperedge too small");
  if (h.contains_edge(e)) throw std::invalid_argument("edge already present");
  std::vector<VertexSet> edges = h.hyperedges();
  edges.push_back(e);
  return Hypergraph(h.vertex_count(), std::move(edges));
}

Hypergraph complement_system(const SetSystem& s) {
  const VertexSet ground = VertexSet::full(s.vertex_count());
  std::vector<VertexSet> edges;
  edges.reserve(s.members().size());
  for (VertexSet e : s.members()) {
    VertexSet comp = ground - e;
    if (comp.size() < 2) throw std::invalid_argument("complement too small");
    edges.push_back(comp);
  }
  return Hypergraph(s.vertex_count(), std::move(edges));
}

std::vector<VertexSet> absent_edges(const Hypergraph& h) {
  const int n = h.vertex_count();
  if (n > 20) throw std::invalid_argument("enumeration bound exceeded");
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet e = VertexSet::from_bits(mask);
    if (e.size() >= 2 && !h.contains_edge(e)) out.push_back(e);
  }
  std::sort(out.begin(), out.end(), subset_canonical_less);
  return out;
}

int degree(const Hypergraph& h, Vertex v) {
  if (v < 1 || v > h.vertex_count()) throw std::invalid_argument("vertex out of range");
  int d = 0;
  for (VertexSet e : h.hyperedges()) d += e.contains(v);
  return d;
}

}  // namespace bergesat
