#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spx/constructions.hpp"
#include "spx/pair_system.hpp"

using namespace spx;

namespace {

SetPairSystem make(int k, int l, PairFlavor f,
                   std::vector<std::pair<ElementSet, ElementSet>> pairs) {
  SetPairSystem sys;
  sys.k = k;
  sys.l = l;
  sys.flavor_claim = f;
  for (auto& [a, b] : pairs) sys.pairs.push_back({a, b});
  return sys;
}

}  // namespace

TEST_CASE("cap checking") {
  auto sys = make(2, 2, PairFlavor::Cross, {{{1, 2, 3}, {4}}});
  CHECK_THROWS_AS(sys.check_caps(), std::invalid_argument);
}

TEST_CASE("cross verification on the 6-point optimum") {
  auto sys = make(2, 2, PairFlavor::Cross,
                  {{{1, 2}, {3, 4}}, {{3, 5}, {1, 6}}});
  CHECK(verify_flavor(sys, PairFlavor::Cross).ok);
  CHECK(verify_flavor(sys, PairFlavor::Skew).ok);  // cross implies skew
  CHECK(verify_flavor(sys, PairFlavor::Weakly).ok);
  CHECK(vertex_set(sys).size() == 6);
}

TEST_CASE("violations carry the offending indices") {
  auto overlap = make(2, 2, PairFlavor::Cross, {{{1, 2}, {2, 3}}});
  auto v1 = verify_flavor(overlap, PairFlavor::Cross);
  CHECK(!v1.ok);
  CHECK(v1.violating_i == 0);
  CHECK(v1.violating_j == 0);  // (i,i) marks a condition-(1) break

  auto miss = make(1, 1, PairFlavor::Cross, {{{1}, {2}}, {{3}, {4}}});
  auto v2 = verify_flavor(miss, PairFlavor::Cross);
  CHECK(!v2.ok);
  CHECK(v2.violating_i != v2.violating_j);
}

TEST_CASE("skew order sensitivity") {
  // valid in this order, invalid reversed
  auto fwd = make(1, 1, PairFlavor::Skew, {{{1}, {2}}, {{3}, {1}}});
  CHECK(verify_flavor(fwd, PairFlavor::Skew).ok);
  CHECK(!verify_flavor(fwd, PairFlavor::Cross).ok);  // A2 misses B1

  auto rev = make(1, 1, PairFlavor::Skew, {{{3}, {1}}, {{1}, {2}}});
  CHECK(!verify_flavor(rev, PairFlavor::Skew).ok);
}

TEST_CASE("weakly accepts one-sided intersection") {
  // A1 meets B2 but A2 misses B1: weakly yes, cross no
  auto sys = make(2, 2, PairFlavor::Weakly,
                  {{{1, 2}, {3, 4}}, {{3, 5}, {6, 7}}});
  CHECK(verify_flavor(sys, PairFlavor::Weakly).ok);
  CHECK(!verify_flavor(sys, PairFlavor::Cross).ok);
}

TEST_CASE("bollobas weight") {
  // colex skew systems are tight: all pairs full-size, weight exactly 1
  for (int k = 1; k <= 4; ++k)
    for (int l = 1; l <= 4; ++l)
      CHECK(bollobas_weight(colex_skew_system(k, l)) == 1);

  auto mixed = make(2, 2, PairFlavor::Cross, {{{1}, {2}}, {{1, 2}, {3, 4}}});
  CHECK(bollobas_weight(mixed) == BigRational(2, 3));  // 1/2 + 1/6

  auto bad = make(2, 2, PairFlavor::Cross, {{{1, 2}, {2, 3}}});
  CHECK_THROWS_AS(bollobas_weight(bad), std::invalid_argument);
}

TEST_CASE("alpha/beta counting identity") {
  for (int k = 2; k <= 4; ++k) {
    for (int l = k; l <= 4; ++l) {
      for (const auto& sys :
           {colex_skew_system(k, l), weakly_triple_system(k, l)}) {
        const auto prof = alpha_beta_profile(sys);
        CHECK(prof.alpha.size() == static_cast<std::size_t>(sys.k));
        CHECK(prof.beta.size() == static_cast<std::size_t>(sys.l));
        std::uint64_t total = 0;
        for (auto a : prof.alpha) total += a;
        for (auto b : prof.beta) total += b;
        CHECK(total == vertex_set(sys).size());
        // alpha_t is nonincreasing in t
        for (std::size_t t = 1; t < prof.alpha.size(); ++t)
          CHECK(prof.alpha[t] <= prof.alpha[t - 1]);
      }
    }
  }
}

TEST_CASE("alpha/beta on the colex skew (2,2) system") {
  const auto prof = alpha_beta_profile(colex_skew_system(2, 2));
  // 6 pairs over 8 points: first pair contributes 2+2 fresh, later ones less
  CHECK(prof.alpha[0] + prof.alpha[1] + prof.beta[0] + prof.beta[1] == 8);
  CHECK(prof.alpha[0] >= 1);
  CHECK(prof.beta[0] >= 1);
}

TEST_CASE("peel decomposition is deterministic and bookkeeps honestly") {
  const auto sys = colex_skew_system(2, 2);
  const auto t1 = peel_decomposition(sys);
  const auto t2 = peel_decomposition(sys);
  CHECK(t1.levels.size() == 3);  // k + l - 1
  CHECK(t1.vertex_count == 8);
  CHECK(t1.sum_matches_vertex_count == (t1.level_size_sum == t1.vertex_count));
  for (std::size_t i = 0; i < t1.levels.size(); ++i) {
    CHECK(t1.levels[i].removed == t2.levels[i].removed);
    CHECK(t1.levels[i].surviving == t2.levels[i].surviving);
    // class labels (a,b) at level j satisfy a + b = j
    for (const auto& [ab, count] : t1.levels[i].class_sizes) {
      CHECK(ab.first + ab.second == t1.levels[i].level);
      CHECK(count > 0);
    }
  }
}

TEST_CASE("peel refuses systems without the skew property") {
  auto bad = make(1, 1, PairFlavor::Skew, {{{1}, {2}}, {{3}, {4}}});
  CHECK_THROWS(peel_decomposition(bad));
}

TEST_CASE("flavor names round trip") {
  for (auto f : {PairFlavor::Cross, PairFlavor::Skew, PairFlavor::Weakly})
    CHECK(flavor_from_name(flavor_name(f)) == f);
  CHECK(!flavor_from_name("bogus"));
}
