#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spx/bigint.hpp"
#include "spx/element_set.hpp"

namespace spx {

enum class PairFlavor { Cross, Skew, Weakly };

std::string flavor_name(PairFlavor f);
std::optional<PairFlavor> flavor_from_name(const std::string& name);

struct SetPair {
  ElementSet A;
  ElementSet B;
};

/// Ordered system of set pairs (A_i, B_i) with size caps |A_i| <= k,
/// |B_i| <= l. Pair order is significant: the skew condition only
/// constrains i < j.
struct SetPairSystem {
  int k = 0;
  int l = 0;
  PairFlavor flavor_claim = PairFlavor::Cross;
  std::vector<SetPair> pairs;

  [[nodiscard]] std::size_t size() const { return pairs.size(); }

  /// Throws if some |A_i| > k or |B_i| > l.
  void check_caps() const;
};

struct FlavorVerdict {
  bool ok = true;
  // first violating (i, j) in lexicographic scan order; (i, i) marks a
  // disjointness violation of condition (1). 0-based.
  int violating_i = -1;
  int violating_j = -1;
  std::string reason;
};

/// Checks condition (1) A_i and B_i disjoint, plus the flavor's
/// intersection condition: all i != j (cross), i < j (skew), or the
/// disjunction A_i&B_j or A_j&B_i (weakly).
FlavorVerdict verify_flavor(const SetPairSystem& sys, PairFlavor flavor);

/// Bollobas weight: sum over pairs of 1 / C(|A_i|+|B_i|, |A_i|).
/// Requires condition (1); throws otherwise.
BigRational bollobas_weight(const SetPairSystem& sys);

/// Union of all A_i and B_i.
ElementSet vertex_set(const SetPairSystem& sys);

struct AlphaBetaProfile {
  std::vector<std::uint64_t> alpha;  // alpha[t-1] for t = 1..k
  std::vector<std::uint64_t> beta;   // beta[t-1]  for t = 1..l
};

/// alpha_t = #{i : |A_i \ U_{i-1}| >= t} where U_{i-1} is the union of
/// all earlier pairs; beta_t likewise for B_i (taken after A_i, so the
/// counting identity sum(alpha) + sum(beta) = |vertex set| holds even
/// for systems violating condition (1)).
AlphaBetaProfile alpha_beta_profile(const SetPairSystem& sys);

struct PeelLevel {
  int level = 0;                      // j, 1-based
  std::vector<int> surviving;          // S_j (0-based indices into sys.pairs)
  std::vector<std::pair<int, int>> removed;  // (index i, point x_i) at this level
  // subsystem class sizes keyed by (a, b) = (|A_i \ A_i^j|, |B_i \ B_i^j|)
  std::vector<std::pair<std::pair<int, int>, std::uint64_t>> class_sizes;
};

struct PeelTrace {
  std::vector<PeelLevel> levels;  // j = 1 .. k+l-1
  BigCount level_size_sum;        // sum of |M_j|
  std::uint64_t vertex_count = 0;
  bool sum_matches_vertex_count = false;
};

/// Iterated minimal-subsystem peeling: at each level keep a minimal index
/// set with the same union, remove one private point per survivor.
/// The index set is minimized greedily in increasing index order and x_i
/// is the smallest private point, so traces are deterministic.
/// Requires the system to verify Skew or Weakly; throws otherwise.
PeelTrace peel_decomposition(const SetPairSystem& sys);

}  // namespace spx
