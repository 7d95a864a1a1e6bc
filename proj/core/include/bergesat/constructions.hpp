#pragma once

#include "bergesat/graph.hpp"
#include "bergesat/hypergraph.hpp"

namespace bergesat {

/// Star witness family H_t(n), t >= 5, n >= t: the full set, the complements
/// of {1},...,{t-3}, and the prefix {1..t-3}. Exactly t-1 hyperedges, every
/// vertex of degree t-2.
Hypergraph construct_ht(int n, int t);

/// Graph on {1..n} with exactly k edges whose degrees differ by at most one.
/// Deterministic greedy: repeatedly join the least minimum-degree vertex to
/// its least minimum-degree non-neighbor, with an edge-swap repair on the
/// rare step where that would spread the degrees by two.
Graph almost_regular_edges(int n, int k);

/// Complement representation H'(n,m), 1 <= m <= C(n,2): the empty set,
/// x = min(m-1, n) singletons {1}..{x}, and m-x-1 pairs forming an almost
/// regular graph.
SetSystem construct_hprime(int n, int m);

/// H(n,m) = complement_system(construct_hprime(n,m)); m = 0 gives the empty
/// hypergraph. Hyperedge sizes are n, n-1 or n-2, so n must be large enough
/// for every complement to keep size >= 2.
Hypergraph construct_hnm(int n, int m);

enum class SpecialGraphKind { S2, S3, S4, K3 };

/// Minimal saturated witnesses for the stars on one, two and three edges and
/// for the triangle: ([n], {}) for S2 (n >= 2), ([n], {[n]}) for S3 (n >= 3),
/// ([n], {[n], [n]-{1}}) for S4 (n >= 4) and for K3 (n >= 3).
Hypergraph special_saturated(SpecialGraphKind kind, int n);

}  // namespace bergesat
