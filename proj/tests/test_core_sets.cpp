#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spx/combinatorics.hpp"
#include "spx/element_set.hpp"

using namespace spx;

TEST_CASE("element set basics") {
  ElementSet s{3, 1, 7};
  CHECK(s.size() == 3);
  CHECK(s.contains(1));
  CHECK(s.contains(7));
  CHECK(!s.contains(2));
  CHECK(s.min_element() == 1);
  CHECK(s.max_element() == 7);
  s.remove(1);
  CHECK(s.size() == 2);
  CHECK(s.min_element() == 3);
  CHECK(s.elements() == std::vector<int>{3, 7});

  ElementSet t{3, 200};  // spans word boundaries
  CHECK(s.intersects(t));
  CHECK(s.intersected(t) == ElementSet{3});
  CHECK(s.united(t) == ElementSet{3, 7, 200});
  CHECK(s.minus(t) == ElementSet{7});
  CHECK(ElementSet{3}.subset_of(s));
  CHECK(!t.subset_of(s));
  CHECK(ElementSet{}.empty());
  CHECK(ElementSet{}.max_element() == 0);

  CHECK_THROWS_AS(s.add(0), std::invalid_argument);
  CHECK_THROWS_AS(s.add(ElementSet::kMaxElement + 1), std::invalid_argument);
}

TEST_CASE("equality and hashing ignore trailing empty words") {
  ElementSet a{5};
  ElementSet b{5, 300};
  b.remove(300);
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
}

TEST_CASE("colex order law matches the symmetric-difference definition") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    ElementSet c, d;
    for (int e = 1; e <= 12; ++e) {
      if (rng() & 1) c.add(e);
      if (rng() & 1) d.add(e);
    }
    const ElementSet sym = c.united(d).minus(c.intersected(d));
    const bool expect = !sym.empty() && d.contains(sym.max_element());
    CHECK(colex_less(c, d) == expect);
  }
}

TEST_CASE("binomial values and Pascal rule") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(52, 5) == 2598960);
  for (long long n = 1; n <= 40; ++n)
    for (long long k = 0; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  CHECK(binomial_big(BigCount(60), 3) == binomial(60, 3));
}

TEST_CASE("colex rank of the worked examples") {
  CHECK(colex_rank(ElementSet{2, 3}) == 2);
  CHECK(colex_rank(ElementSet{1, 4}) == 3);
  CHECK(colex_rank(ElementSet{1, 2}) == 0);
  CHECK_THROWS_AS(colex_rank(ElementSet{}), std::invalid_argument);
}

TEST_CASE("rank/unrank round trip") {
  for (int k = 1; k <= 6; ++k) {
    const BigCount limit = binomial(12, k);
    for (BigCount r = 0; r < limit; ++r) {
      const ElementSet s = colex_unrank(r, k);
      CHECK(s.size() == static_cast<std::size_t>(k));
      CHECK(colex_rank(s) == r);
    }
  }
}

TEST_CASE("colex stream is strictly increasing and complete") {
  for (int n = 1; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) {
      ColexKSubsets stream(n, k);
      ElementSet cur, prev;
      BigCount count = 0;
      bool first = true;
      while (stream.next(cur)) {
        CHECK(cur.size() == static_cast<std::size_t>(k));
        CHECK(cur.max_element() <= n);
        if (!first) CHECK(colex_less(prev, cur));
        prev = cur;
        first = false;
        ++count;
      }
      CHECK(count == binomial(n, k));
      // unrank agrees with the stream position
      if (k >= 1) {
        const auto all = ksubsets_colex(n, k);
        for (std::size_t i = 0; i < all.size(); ++i)
          CHECK(colex_unrank(BigCount(i), k) == all[i]);
      }
    }
  }
}
