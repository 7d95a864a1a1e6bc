#include "bergesat/berge.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bergesat {

namespace {

// Pattern vertices in descending-degree order, ties by ascending label.
std::vector<Vertex> pattern_order(const Graph& g) {
  std::vector<Vertex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

// Matching test over the currently embedded pattern edges (both endpoints
// placed), left side in ascending edge-index order. Fills `assignment`
// (edge index -> hyperedge index) when requested and the matching is full.
bool edges_assignable(const Graph& g, const Hypergraph& h, const std::vector<Vertex>& host_for,
                      std::vector<int>* assignment) {
  std::vector<int> embedded;
  for (int i = 0; i < g.edge_count(); ++i) {
    auto [u, v] = g.edges()[i];
    if (host_for[u] && host_for[v]) embedded.push_back(i);
  }
  BipartiteGraph f(static_cast<int>(embedded.size()), h.edge_count());
  for (int li = 0; li < static_cast<int>(embedded.size()); ++li) {
    auto [u, v] = g.edges()[embedded[li]];
    VertexSet pr = VertexSet::of({host_for[u], host_for[v]});
    for (int j = 0; j < h.edge_count(); ++j)
      if (pr.subset_of(h.hyperedges()[j])) f.add(li, j);
  }
  auto match = max_matching(f);
  if (match.size() != embedded.size()) return false;
  if (assignment) {
    assignment->assign(g.edge_count(), -1);
    for (auto [li, r] : match) (*assignment)[embedded[li]] = r;
  }
  return true;
}

bool embed(const Graph& g, const Hypergraph& h, const std::vector<Vertex>& order,
           const std::vector<int>& host_deg, std::vector<Vertex>& host_for, std::uint64_t& used,
           std::size_t depth, BergeWitness& out) {
  if (depth == order.size()) {
    std::vector<int> assignment;
    if (!edges_assignable(g, h, host_for, &assignment)) return false;
    out.vertex_map.assign(g.vertex_count(), 0);
    for (Vertex v = 1; v <= g.vertex_count(); ++v) out.vertex_map[v - 1] = host_for[v];
    out.edge_assignment = std::move(assignment);
    return true;
  }
  Vertex x = order[depth];
  const int need = g.degree(x);
  for (Vertex w = 1; w <= h.vertex_count(); ++w) {
    if ((used >> (w - 1)) & 1) continue;
    // Each pattern edge at x needs its own hyperedge containing host w.
    if (host_deg[w] < need) continue;
    host_for[x] = w;
    used |= std::uint64_t{1} << (w - 1);
    if (edges_assignable(g, h, host_for, nullptr) &&
        embed(g, h, order, host_deg, host_for, used, depth + 1, out))
      return true;
    used &= ~(std::uint64_t{1} << (w - 1));
    host_for[x] = 0;
  }
  return false;
}

}  // namespace

std::optional<BergeWitness> contains_berge(const Graph& g, const Hypergraph& h) {
  if (g.has_isolated_vertex()) throw std::invalid_argument("isolated vertices not allowed");
  if (g.vertex_count() > h.vertex_count()) return std::nullopt;
  if (h.edge_count() < g.edge_count()) return std::nullopt;
  const auto order = pattern_order(g);
  std::vector<int> host_deg(h.vertex_count() + 1, 0);
  for (Vertex v = 1; v <= h.vertex_count(); ++v) host_deg[v] = degree(h, v);
  std::vector<Vertex> host_for(g.vertex_count() + 1, 0);
  std::uint64_t used = 0;
  BergeWitness w;
  if (embed(g, h, order, host_deg, host_for, used, 0, w)) return w;
  return std::nullopt;
}

namespace {

bool oracle_assign(const Graph& g, const Hypergraph& h, const std::vector<Vertex>& vm, int ei,
                   std::uint64_t& used_idx, std::vector<int>& assign) {
  if (ei == g.edge_count()) return true;
  auto [u, v] = g.edges()[ei];
  VertexSet pr = VertexSet::of({vm[u], vm[v]});
  for (int j = 0; j < h.edge_count(); ++j) {
    if ((used_idx >> j) & 1) continue;
    if (!pr.subset_of(h.hyperedges()[j])) continue;
    used_idx |= std::uint64_t{1} << j;
    assign[ei] = j;
    if (oracle_assign(g, h, vm, ei + 1, used_idx, assign)) return true;
    used_idx &= ~(std::uint64_t{1} << j);
    assign[ei] = -1;
  }
  return false;
}

bool oracle_embed(const Graph& g, const Hypergraph& h, Vertex v, std::vector<Vertex>& vm,
                  std::uint64_t& used, std::vector<int>& assign) {
  if (v > g.vertex_count()) {
    std::uint64_t used_idx = 0;
    return oracle_assign(g, h, vm, 0, used_idx, assign);
  }
  for (Vertex w = 1; w <= h.vertex_count(); ++w) {
    if ((used >> (w - 1)) & 1) continue;
    vm[v] = w;
    used |= std::uint64_t{1} << (w - 1);
    if (oracle_embed(g, h, v + 1, vm, used, assign)) return true;
    used &= ~(std::uint64_t{1} << (w - 1));
    vm[v] = 0;
  }
  return false;
}

}  // namespace

std::optional<BergeWitness> contains_berge_oracle(const Graph& g, const Hypergraph& h) {
  if (g.vertex_count() > 7 || g.edge_count() > 6 || h.edge_count() > 8)
    throw std::invalid_argument("oracle bound exceeded");
  if (g.vertex_count() > h.vertex_count()) return std::nullopt;
  std::vector<Vertex> vm(g.vertex_count() + 1, 0);
  std::uint64_t used = 0;
  std::vector<int> assign(g.edge_count(), -1);
  if (!oracle_embed(g, h, 1, vm, used, assign)) return std::nullopt;
  BergeWitness w;
  w.vertex_map.assign(vm.begin() + 1, vm.end());
  w.edge_assignment = std::move(assign);
  return w;
}

bool validate_witness(const Graph& g, const Hypergraph& h, const BergeWitness& w) {
  if (static_cast<int>(w.vertex_map.size()) != g.vertex_count()) return false;
  if (static_cast<int>(w.edge_assignment.size()) != g.edge_count()) return false;
  std::uint64_t seen = 0;
  for (Vertex hv : w.vertex_map) {
    if (hv < 1 || hv > h.vertex_count()) return false;
    if ((seen >> (hv - 1)) & 1) return false;
    seen |= std::uint64_t{1} << (hv - 1);
  }
  std::uint64_t used_idx = 0;
  for (int i = 0; i < g.edge_count(); ++i) {
    int j = w.edge_assignment[i];
    if (j < 0 || j >= h.edge_count()) return false;
    if ((used_idx >> j) & 1) return false;
    used_idx |= std::uint64_t{1} << j;
    auto [u, v] = g.edges()[i];
    VertexSet pr = VertexSet::of({w.vertex_map[u - 1], w.vertex_map[v - 1]});
    if (!pr.subset_of(h.hyperedges()[j])) return false;
  }
  return true;
}

MatchingResult certificate_condition_iii(const Graph& g, Edge removed_edge,
                                         const SetSystem& hprime) {
  if (removed_edge.first > removed_edge.second)
    std::swap(removed_edge.first, removed_edge.second);
  if (!g.has_edge(removed_edge.first, removed_edge.second))
    throw std::invalid_argument("removed edge not in graph");
  if (g.edge_count() - 1 != hprime.member_count())
    throw std::invalid_argument("parts of F have unequal size");
  std::vector<Edge> rest;
  for (Edge e : g.edges())
    if (e != removed_edge) rest.push_back(e);
  BipartiteGraph f(static_cast<int>(rest.size()), hprime.member_count());
  for (int li = 0; li < static_cast<int>(rest.size()); ++li)
    for (int ri = 0; ri < hprime.member_count(); ++ri)
      if (!edge_set(rest[li]).intersects(hprime.members()[ri])) f.add(li, ri);
  return perfect_or_violator(f);
}

}  // namespace bergesat
