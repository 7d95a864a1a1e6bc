#include "bergesat/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace bergesat {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 1 || n > kMaxGroundSetSize) throw std::invalid_argument("ground set size out of range");
  for (auto& [u, v] : edges_) {
    if (u > v) std::swap(u, v);
    if (u == v) throw std::invalid_argument("loop edge");
    if (u < 1 || v > n_) throw std::invalid_argument("edge endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");
}

int Graph::degree(Vertex v) const {
  int d = 0;
  for (auto [a, b] : edges_) d += (a == v || b == v);
  return d;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

bool Graph::has_isolated_vertex() const {
  VertexSet covered;
  for (Edge e : edges_) covered = covered | edge_set(e);
  return covered != VertexSet::full(n_);
}

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::optional<Vertex> is_star(const Graph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("empty graph not classifiable");
  VertexSet common = edge_set(g.edges().front());
  for (Edge e : g.edges()) common = common & edge_set(e);
  if (common.empty()) return std::nullopt;
  return common.min_vertex();
}

namespace {

bool covers(const Graph& g, VertexSet c) {
  for (Edge e : g.edges())
    if (!edge_set(e).intersects(c)) return false;
  return true;
}

}  // namespace

std::optional<std::vector<Vertex>> has_vertex_cover_le2(const Graph& g) {
  if (g.edge_count() == 0) return std::vector<Vertex>{};
  for (Vertex a = 1; a <= g.vertex_count(); ++a)
    if (covers(g, VertexSet::single(a))) return std::vector<Vertex>{a};
  for (Vertex a = 1; a <= g.vertex_count(); ++a)
    for (Vertex b = a + 1; b <= g.vertex_count(); ++b)
      if (covers(g, VertexSet::of({a, b}))) return std::vector<Vertex>{a, b};
  return std::nullopt;
}

std::optional<std::pair<Vertex, Vertex>> is_two_star_union(const Graph& g) {
  // A union of two non-empty stars with distinct centers has >= 2 edges.
  if (g.edge_count() < 2) return std::nullopt;
  if (is_star(g)) return std::nullopt;
  for (Vertex a = 1; a <= g.vertex_count(); ++a)
    for (Vertex b = a + 1; b <= g.vertex_count(); ++b)
      if (covers(g, VertexSet::of({a, b}))) return std::pair{a, b};
  return std::nullopt;
}

GraphClass classify_for_theorem(const Graph& g) {
  if (g.edge_count() == 0 || g.has_isolated_vertex())
    throw std::invalid_argument("isolated vertices not allowed");
  auto center = is_star(g);
  GraphClass out;
  out.center = center;
  out.tag = (center && g.edge_count() >= 4) ? GraphClassTag::StarWithAtLeast4Edges
                                            : GraphClassTag::Other;
  return out;
}

int predicted_sat(const Graph& g) {
  return classify_for_theorem(g).tag == GraphClassTag::StarWithAtLeast4Edges
             ? g.edge_count()
             : g.edge_count() - 1;
}

namespace {

std::vector<Edge> pair_list(int n) {
  std::vector<Edge> out;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) out.push_back({u, v});
  return out;
}

// For every permutation of {1..n}, the induced map on edge indices.
std::vector<std::vector<int>> edge_permutations(int n, const std::vector<Edge>& pairs) {
  const int ec = static_cast<int>(pairs.size());
  std::vector<std::vector<int>> index_of(n + 1, std::vector<int>(n + 1, -1));
  for (int i = 0; i < ec; ++i) index_of[pairs[i].first][pairs[i].second] = i;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> tables;
  do {
    std::vector<int> t(ec);
    for (int i = 0; i < ec; ++i) {
      Vertex a = perm[pairs[i].first - 1];
      Vertex b = perm[pairs[i].second - 1];
      if (a > b) std::swap(a, b);
      t[i] = index_of[a][b];
    }
    tables.push_back(std::move(t));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return tables;
}

std::uint32_t remap_edge_mask(std::uint32_t mask, const std::vector<int>& table) {
  std::uint32_t out = 0;
  for (std::uint32_t m = mask; m; m &= m - 1) out |= std::uint32_t{1} << table[std::countr_zero(m)];
  return out;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n_max, int e_max) {
  if (n_max > 7) throw std::invalid_argument("enumeration bound exceeded");
  std::vector<Graph> out;
  for (int n = 2; n <= n_max; ++n) {
    const auto pairs = pair_list(n);
    const int ec = static_cast<int>(pairs.size());
    const auto tables = edge_permutations(n, pairs);
    std::vector<std::uint32_t> canon;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << ec); ++mask) {
      if (std::popcount(mask) > e_max) continue;
      VertexSet covered;
      for (std::uint32_t m = mask; m; m &= m - 1) covered = covered | edge_set(pairs[std::countr_zero(m)]);
      if (covered != VertexSet::full(n)) continue;  // isolated vertex
      bool minimal = true;
      for (const auto& t : tables)
        if (remap_edge_mask(mask, t) < mask) {
          minimal = false;
          break;
        }
      if (minimal) canon.push_back(mask);
    }
    std::sort(canon.begin(), canon.end(), [](std::uint32_t a, std::uint32_t b) {
      return std::pair(std::popcount(a), a) < std::pair(std::popcount(b), b);
    });
    for (std::uint32_t mask : canon) {
      std::vector<Edge> es;
      for (std::uint32_t m = mask; m; m &= m - 1) es.push_back(pairs[std::countr_zero(m)]);
      out.emplace_back(n, std::move(es));
    }
  }
  return out;
}

}  // namespace bergesat
