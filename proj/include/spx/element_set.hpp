#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace spx {

/// A finite subset of the positive integers, bit-indexed in 64-bit words.
/// Elements are 1-based. Immutable by convention once a family or pair
/// system has taken ownership; all mutators are only used during building.
class ElementSet {
 public:
  // Hard cap on the ground set. The largest desk-scale construction
  // (Erdos-Lovasz at k=6) needs 514 points.
  static constexpr int kMaxElement = 4096;

  ElementSet() = default;
  ElementSet(std::initializer_list<int> elems) {
    for (int e : elems) add(e);
  }

  void add(int e) {
    check(e);
    const std::size_t w = word_index(e);
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= bit(e);
  }

  void remove(int e) {
    check(e);
    const std::size_t w = word_index(e);
    if (w < words_.size()) words_[w] &= ~bit(e);
  }

  [[nodiscard]] bool contains(int e) const {
    if (e < 1 || e > kMaxElement) return false;
    const std::size_t w = word_index(e);
    return w < words_.size() && (words_[w] & bit(e)) != 0;
  }

  [[nodiscard]] std::size_t size() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  [[nodiscard]] bool empty() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }

  [[nodiscard]] bool intersects(const ElementSet& o) const {
    const std::size_t n = std::min(words_.size(), o.words_.size());
    for (std::size_t i = 0; i < n; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  [[nodiscard]] bool disjoint(const ElementSet& o) const { return !intersects(o); }

  [[nodiscard]] bool subset_of(const ElementSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const std::uint64_t other = i < o.words_.size() ? o.words_[i] : 0;
      if (words_[i] & ~other) return false;
    }
    return true;
  }

  void unite(const ElementSet& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
  }

  [[nodiscard]] ElementSet united(const ElementSet& o) const {
    ElementSet r = *this;
    r.unite(o);
    return r;
  }

  [[nodiscard]] ElementSet intersected(const ElementSet& o) const {
    ElementSet r;
    const std::size_t n = std::min(words_.size(), o.words_.size());
    r.words_.resize(n, 0);
    for (std::size_t i = 0; i < n; ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }

  [[nodiscard]] ElementSet minus(const ElementSet& o) const {
    ElementSet r = *this;
    const std::size_t n = std::min(r.words_.size(), o.words_.size());
    for (std::size_t i = 0; i < n; ++i) r.words_[i] &= ~o.words_[i];
    return r;
  }

  /// Largest element, or 0 when empty.
  [[nodiscard]] int max_element() const {
    for (std::size_t i = words_.size(); i-- > 0;) {
      if (words_[i])
        return static_cast<int>(i * 64 + 64 - std::countl_zero(words_[i]));
    }
    return 0;
  }

  /// Smallest element, or 0 when empty.
  [[nodiscard]] int min_element() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i])
        return static_cast<int>(i * 64 + 1 + std::countr_zero(words_[i]));
    }
    return 0;
  }

  [[nodiscard]] std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        out.push_back(static_cast<int>(i * 64 + 1 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  bool operator==(const ElementSet& o) const {
    const std::size_t n = std::max(words_.size(), o.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t a = i < words_.size() ? words_[i] : 0;
      const std::uint64_t b = i < o.words_.size() ? o.words_[i] : 0;
      if (a != b) return false;
    }
    return true;
  }
  bool operator!=(const ElementSet& o) const { return !(*this == o); }

  [[nodiscard]] std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    // trailing zero words must not affect the hash
    std::size_t last = words_.size();
    while (last > 0 && words_[last - 1] == 0) --last;
    for (std::size_t i = 0; i < last; ++i) {
      h ^= std::hash<std::uint64_t>{}(words_[i]);
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  static std::size_t word_index(int e) { return static_cast<std::size_t>(e - 1) / 64; }
  static std::uint64_t bit(int e) { return 1ull << ((e - 1) % 64); }
  static void check(int e) {
    if (e < 1 || e > kMaxElement)
      throw std::invalid_argument("ElementSet: element out of range [1, 4096]");
  }

  std::vector<std::uint64_t> words_;
};

/// Colex comparison: C < D iff the largest element of C ^ D lies in D.
inline bool colex_less(const ElementSet& c, const ElementSet& d) {
  const auto ce = c.elements();
  const auto de = d.elements();
  auto ci = ce.rbegin();
  auto di = de.rbegin();
  for (; ci != ce.rend() && di != de.rend(); ++ci, ++di) {
    if (*ci != *di) return *ci < *di;
  }
  return di != de.rend();  // strict prefix from the top means c is smaller
}

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace spx
