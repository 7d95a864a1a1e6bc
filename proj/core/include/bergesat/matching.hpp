#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace bergesat {

/// Bipartite graph with indexed parts. Right indices live in a 64-bit mask,
/// so right_size <= 64.
struct BipartiteGraph {
  int left_size = 0;
  int right_size = 0;
  std::vector<std::uint64_t> adjacency;  // adjacency[l] = mask of adjacent right indices

  BipartiteGraph(int left, int right);
  void add(int l, int r);
};

enum class MatchKind { Perfect, Deficient };

/// Maximum matching plus, when the left side is not saturated, a Hall
/// violator: a left set S with |N(S)| < |S|.
struct MatchingResult {
  MatchKind kind = MatchKind::Perfect;
  std::vector<std::pair<int, int>> pairs;  // (left, right), ascending left
  std::vector<int> violator;               // ascending; non-empty iff Deficient
};

/// Deterministic augmenting-path matching: left vertices in ascending index
/// order, augmenting paths explored in ascending right-index order.
std::vector<std::pair<int, int>> max_matching(const BipartiteGraph& b);

/// Perfect (left side saturated) or Deficient with a violator extracted from
/// the vertices reachable by alternating paths from the least unmatched left
/// vertex.
MatchingResult perfect_or_violator(const BipartiteGraph& b);

}  // namespace bergesat
