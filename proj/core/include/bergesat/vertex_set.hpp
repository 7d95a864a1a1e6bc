#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace bergesat {

/// Vertices are 1-based throughout, matching the [n] = {1,...,n} convention.
using Vertex = int;

/// Largest supported ground set; subsets fit in a 64-bit mask.
inline constexpr int kMaxGroundSetSize = 62;

/// A subset of the ground set {1..n}. Bit v-1 of the mask holds vertex v.
class VertexSet {
 public:
  constexpr VertexSet() = default;

  static constexpr VertexSet from_bits(std::uint64_t bits) { return VertexSet(bits); }

  /// The full set {1..n}.
  static constexpr VertexSet full(int n) {
    return VertexSet(n <= 0 ? 0 : ~std::uint64_t{0} >> (64 - n));
  }

  static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << (v - 1)); }

  static VertexSet of(std::initializer_list<Vertex> vs) {
    std::uint64_t b = 0;
    for (Vertex v : vs) b |= std::uint64_t{1} << (v - 1);
    return VertexSet(b);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(Vertex v) const { return (bits_ >> (v - 1)) & 1; }
  bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  /// Least element; only meaningful for non-empty sets.
  Vertex min_vertex() const { return std::countr_zero(bits_) + 1; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  VertexSet with(Vertex v) const { return VertexSet(bits_ | (std::uint64_t{1} << (v - 1))); }
  VertexSet without(Vertex v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << (v - 1))); }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;

  /// Elements in ascending order.
  std::vector<Vertex> elements() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

 private:
  constexpr explicit VertexSet(std::uint64_t b) : bits_(b) {}
  std::uint64_t bits_ = 0;
};

/// Ascending (size, lexicographic) order; the listing order of set systems.
/// Lexicographic compares the ascending element sequences: for equal sizes,
/// a precedes b exactly when the least element of the symmetric difference
/// lies in a.
inline bool subset_canonical_less(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return (a.bits() & (diff & (~diff + 1))) != 0;
}

/// Hyperedge listing order: descending size, then descending lexicographic.
/// This is the exact reverse of subset_canonical_less, so complementing a
/// canonically listed set system member-wise already yields a canonically
/// listed hyperedge sequence.
inline bool hyperedge_canonical_less(VertexSet a, VertexSet b) {
  return subset_canonical_less(b, a);
}

}  // namespace bergesat
