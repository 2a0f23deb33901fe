#include "spx/combinatorics.hpp"

#include <stdexcept>

namespace spx {

BigCount binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i) after this step
  }
  return r;
}

BigCount binomial_big(const BigCount& n, long long k) {
  if (k < 0 || n < 0 || n < k) return 0;
  BigCount r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigCount colex_rank(const ElementSet& s) {
  if (s.empty()) throw std::invalid_argument("colex_rank: empty set");
  BigCount r = 0;
  long long j = 0;
  for (int a : s.elements()) {
    ++j;
    r += binomial(a - 1, j);
  }
  return r;
}

ElementSet colex_unrank(BigCount r, int k) {
  if (k < 1) throw std::invalid_argument("colex_unrank: k must be positive");
  if (r < 0) throw std::invalid_argument("colex_unrank: negative rank");
  ElementSet out;
  for (int j = k; j >= 1; --j) {
    // largest a with C(a-1, j) <= r; element is a
    long long a = j;
    while (binomial(a, j) <= r) ++a;
    out.add(static_cast<int>(a));
    r -= binomial(a - 1, j);
  }
  return out;
}

ColexKSubsets::ColexKSubsets(int n, int k) : n_(n), k_(k), done_(false), first_(true) {
  if (k < 0 || n < 0 || k > n) {
    done_ = true;
    return;
  }
  cur_.resize(k);
  for (int i = 0; i < k; ++i) cur_[i] = i + 1;
}

bool ColexKSubsets::next(ElementSet& out) {
  if (done_) return false;
  if (first_) {
    first_ = false;
  } else {
    // colex successor: bump the lowest element that has headroom,
    // reset everything below it to 1..j-1
    int j = 0;
    while (j < k_) {
      const int ceiling = (j + 1 < k_) ? cur_[j + 1] : n_ + 1;
      if (cur_[j] + 1 < ceiling) break;
      ++j;
    }
    if (j == k_) {
      done_ = true;
      return false;
    }
    ++cur_[j];
    for (int i = 0; i < j; ++i) cur_[i] = i + 1;
  }
  out = ElementSet{};
  for (int e : cur_) out.add(e);
  if (k_ == 0) done_ = true;  // single empty subset
  return true;
}

std::vector<ElementSet> ksubsets_colex(int n, int k) {
  std::vector<ElementSet> out;
  ColexKSubsets stream(n, k);
  ElementSet s;
  while (stream.next(s)) out.push_back(s);
  return out;
}

}  // namespace spx
