#include "bergesat/matching.hpp"

#include <bit>
#include <stdexcept>

namespace bergesat {

BipartiteGraph::BipartiteGraph(int left, int right)
    : left_size(left), right_size(right), adjacency(static_cast<std::size_t>(left < 0 ? 0 : left), 0) {
  if (left < 0 || right < 0 || right > 64)
    throw std::invalid_argument("bipartite part size out of range");
}

void BipartiteGraph::add(int l, int r) {
  if (l < 0 || l >= left_size || r < 0 || r >= right_size)
    throw std::invalid_argument("bipartite index out of range");
  adjacency[l] |= std::uint64_t{1} << r;
}

namespace {

struct Matcher {
  const BipartiteGraph& b;
  std::vector<int> match_left;   // left -> right, -1 if unmatched
  std::vector<int> match_right;  // right -> left, -1 if unmatched
  std::uint64_t visited = 0;

  explicit Matcher(const BipartiteGraph& bg)
      : b(bg), match_left(bg.left_size, -1), match_right(bg.right_size, -1) {}

  bool augment(int u) {
    for (;;) {
      std::uint64_t avail = b.adjacency[u] & ~visited;
      if (!avail) return false;
      int r = std::countr_zero(avail);
      visited |= std::uint64_t{1} << r;
      if (match_right[r] < 0 || augment(match_right[r])) {
        match_left[u] = r;
        match_right[r] = u;
        return true;
      }
    }
  }

  int run() {
    int size = 0;
    for (int u = 0; u < b.left_size; ++u) {
      visited = 0;
      size += augment(u);
    }
    return size;
  }

  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < b.left_size; ++u)
      if (match_left[u] >= 0) out.push_back({u, match_left[u]});
    return out;
  }
};

}  // namespace

std::vector<std::pair<int, int>> max_matching(const BipartiteGraph& b) {
  Matcher m(b);
  m.run();
  return m.pairs();
}

MatchingResult perfect_or_violator(const BipartiteGraph& b) {
  Matcher m(b);
  int size = m.run();
  MatchingResult res;
  res.pairs = m.pairs();
  if (size == b.left_size) {
    res.kind = MatchKind::Perfect;
    return res;
  }
  res.kind = MatchKind::Deficient;
  int u0 = 0;
  while (m.match_left[u0] >= 0) ++u0;
  // Alternating-path reachability from u0. Every right vertex reached is
  // matched (else an augmenting path would exist), so |N(S)| = |S| - 1.
  std::vector<char> in_s(b.left_size, 0);
  std::vector<int> queue{u0};
  in_s[u0] = 1;
  std::uint64_t reached_right = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int x = queue[qi];
    for (std::uint64_t mm = b.adjacency[x] & ~reached_right; mm; mm &= mm - 1) {
      int r = std::countr_zero(mm);
      reached_right |= std::uint64_t{1} << r;
      int x2 = m.match_right[r];
      if (x2 >= 0 && !in_s[x2]) {
        in_s[x2] = 1;
        queue.push_back(x2);
      }
    }
  }
  for (int u = 0; u < b.left_size; ++u)
    if (in_s[u]) res.violator.push_back(u);
  return res;
}

}  // namespace bergesat
