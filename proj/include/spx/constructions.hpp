#pragma once

#include "spx/pair_system.hpp"
#include "spx/set_family.hpp"

namespace spx {

/// Tuza's intersecting family: one fresh point per unordered partition of
/// a (2k-2)-set into halves E, E', emitting E + {x} and E' + {x}. Gives
/// C(2k-2, k-1) k-sets over 2k-2 + C(2k-2, k-1)/2 points. The covering
/// number equals k for k >= 3 (k = 2 degenerates to tau = 1).
SetFamily tuza_tau_k_family(int k);

/// Erdos-Lovasz cross-intersecting pairs: for each (k-1)-subset A' of a
/// (2k-2)-set, the pair (A' + {u}, complement + {v}) with u, v fresh.
/// C(2k-2, k-1) pairs over 2k-2 + 2*C(2k-2, k-1) points.
SetPairSystem erdos_lovasz_pairs(int k);

/// Skew system over Y = [k+l]: A_i is the i-th k-subset of Y in colex
/// order, B_i meets Y in [max(A_i)] \ A_i and is padded to size l with
/// fresh pairwise-disjoint points. C(k+l, k) pairs (meeting the skew
/// pair-count bound with equality) over k+l + C(k+l, k+1) points.
SetPairSystem colex_skew_system(int k, int l);

/// Weakly cross-intersecting triples over Y = [k+l-1], k <= l: a system
/// of distinct representatives assigns each (k-1)-subset A' a disjoint
/// (l-1)-subset B' (maximum bipartite matching), then three pairs per A'
/// cycle through fresh points x, y, z. 3*C(k+l-1, k-1) pairs.
SetPairSystem weakly_triple_system(int k, int l);

/// All k-subsets of [n] containing the fixed element e, in colex order.
SetFamily ekr_star(int n, int k, int e);

}  // namespace spx
