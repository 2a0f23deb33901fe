#pragma once

#include <cstdint>
#include <vector>

#include "spx/bigint.hpp"
#include "spx/element_set.hpp"

namespace spx {

/// Exact C(n, k); 0 when k < 0 or k > n.
BigCount binomial(long long n, long long k);

/// Exact C(n, k) for big n (used for sums like C(C(n,k), j)).
BigCount binomial_big(const BigCount& n, long long k);

/// 0-based position of a nonempty k-set among all k-subsets of the
/// naturals in colex order: sum of C(a_j - 1, j) over ascending elements.
BigCount colex_rank(const ElementSet& s);

/// Inverse of colex_rank for a given cardinality k >= 1.
ElementSet colex_unrank(BigCount r, int k);

/// Streams the k-subsets of [n] in strictly increasing colex order.
class ColexKSubsets {
 public:
  ColexKSubsets(int n, int k);

  /// False once the stream is exhausted; fills `out` otherwise.
  bool next(ElementSet& out);

 private:
  int n_;
  int k_;
  bool done_;
  bool first_;
  std::vector<int> cur_;
};

/// Convenience: all k-subsets of [n] in colex order, materialized.
std::vector<ElementSet> ksubsets_colex(int n, int k);

}  // namespace spx
