#include "bergesat/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace bergesat {

Hypergraph construct_ht(int n, int t) {
  if (t < 5 || n < t) throw std::invalid_argument("parameters outside Lemma regime");
  std::vector<VertexSet> edges;
  edges.push_back(VertexSet::full(n));
  for (Vertex v = 1; v <= t - 3; ++v) edges.push_back(VertexSet::full(n).without(v));
  edges.push_back(VertexSet::full(t - 3));
  return Hypergraph(n, std::move(edges));
}

namespace {

struct GreedyState {
  int n;
  std::vector<std::uint64_t> adj;  // adj[v] = neighbor mask, 1-based
  std::vector<int> deg;

  explicit GreedyState(int n_) : n(n_), adj(n_ + 1, 0), deg(n_ + 1, 0) {}

  bool adjacent(Vertex a, Vertex b) const { return (adj[a] >> (b - 1)) & 1; }
  void link(Vertex a, Vertex b) {
    adj[a] |= std::uint64_t{1} << (b - 1);
    adj[b] |= std::uint64_t{1} << (a - 1);
    ++deg[a];
    ++deg[b];
  }
  void unlink(Vertex a, Vertex b) {
    adj[a] &= ~(std::uint64_t{1} << (b - 1));
    adj[b] &= ~(std::uint64_t{1} << (a - 1));
    --deg[a];
    --deg[b];
  }
  int min_degree() const { return *std::min_element(deg.begin() + 1, deg.end()); }
  int max_degree() const { return *std::max_element(deg.begin() + 1, deg.end()); }
  Vertex least_of_degree(int d) const {
    for (Vertex v = 1; v <= n; ++v)
      if (deg[v] == d) return v;
    return 0;
  }
};

}  // namespace

Graph almost_regular_edges(int n, int k) {
  if (n < 1 || k < 0 || k > n * (n - 1) / 2) throw std::invalid_argument("too many edges");
  GreedyState st(n);
  for (int step = 0; step < k; ++step) {
    Vertex u = st.least_of_degree(st.min_degree());
    // Least non-neighbor of u, minimizing (degree, label). The graph is not
    // complete here (k <= C(n,2)), so u has a non-neighbor.
    Vertex v = 0;
    for (Vertex w = 1; w <= n; ++w) {
      if (w == u || st.adjacent(u, w)) continue;
      if (v == 0 || st.deg[w] < st.deg[v]) v = w;
    }
    st.link(u, v);
    if (st.max_degree() - st.min_degree() > 1) {
      // Only possible when every minimum-degree vertex besides u was adjacent
      // to u: v sits two above some w. Rotate one of v's other edges onto w.
      Vertex w = st.least_of_degree(st.min_degree());
      bool repaired = false;
      for (Vertex y = 1; y <= n && !repaired; ++y) {
        if (y == u || y == w || !st.adjacent(v, y) || st.adjacent(w, y)) continue;
        st.unlink(v, y);
        st.link(w, y);
        repaired = true;
      }
      if (!repaired || st.max_degree() - st.min_degree() > 1)
        throw std::logic_error("almost regular repair failed");
    }
  }
  std::vector<Edge> edges;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b)
      if (st.adjacent(a, b)) edges.push_back({a, b});
  return Graph(n, std::move(edges));
}

SetSystem construct_hprime(int n, int m) {
  if (m < 1 || m > n * (n - 1) / 2) throw std::invalid_argument("m outside construction range");
  const int x = std::min(m - 1, n);
  std::vector<VertexSet> members;
  members.push_back(VertexSet{});
  for (Vertex v = 1; v <= x; ++v) members.push_back(VertexSet::single(v));
  for (Edge e : almost_regular_edges(n, m - x - 1).edges()) members.push_back(edge_set(e));
  return SetSystem(n, std::move(members));
}

Hypergraph construct_hnm(int n, int m) {
  if (m == 0) return Hypergraph(n, {});
  if (m < 1 || m > n * (n - 1) / 2) throw std::invalid_argument("m outside construction range");
  const int x = std::min(m - 1, n);
  const int pair_count = m - x - 1;
  // Complements of singletons have size n-1, of pairs size n-2.
  if ((x >= 1 && n < 3) || (pair_count >= 1 && n < 4))
    throw std::invalid_argument("ground set too small");
  return complement_system(construct_hprime(n, m));
}

Hypergraph special_saturated(SpecialGraphKind kind, int n) {
  switch (kind) {
    case SpecialGraphKind::S2:
      if (n < 2) throw std::invalid_argument("n too small for witness");
      return Hypergraph(n, {});
    case SpecialGraphKind::S3:
      if (n < 3) throw std::invalid_argument("n too small for witness");
      return Hypergraph(n, {VertexSet::full(n)});
    case SpecialGraphKind::S4:
      if (n < 4) throw std::invalid_argument("n too small for witness");
      return Hypergraph(n, {VertexSet::full(n), VertexSet::full(n).without(1)});
    case SpecialGraphKind::K3:
      if (n < 3) throw std::invalid_argument("n too small for witness");
      return Hypergraph(n, {VertexSet::full(n), VertexSet::full(n).without(1)});
  }
  throw std::invalid_argument("unknown special graph kind");
}

}  // namespace bergesat
