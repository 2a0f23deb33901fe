#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spx/combinatorics.hpp"
#include "spx/constructions.hpp"
#include "spx/families.hpp"
#include "spx/search.hpp"

using namespace spx;

namespace {

SetFamily triangle() {
  SetFamily fam;
  fam.n = 3;
  fam.k = 2;
  fam.add(ElementSet{1, 2});
  fam.add(ElementSet{1, 3});
  fam.add(ElementSet{2, 3});
  return fam;
}

}  // namespace

TEST_CASE("set family invariants") {
  SetFamily fam;
  fam.n = 4;
  fam.k = 2;
  fam.add(ElementSet{1, 2});
  CHECK_THROWS_AS(fam.add(ElementSet{1, 2}), std::invalid_argument);   // duplicate
  CHECK_THROWS_AS(fam.add(ElementSet{1, 2, 3}), std::invalid_argument); // not 2-uniform
  CHECK_THROWS_AS(fam.add(ElementSet{4, 5}), std::invalid_argument);   // outside [4]
  CHECK(fam.contains(ElementSet{1, 2}));
  CHECK(is_intersecting(fam));
  fam.add(ElementSet{3, 4});
  CHECK(!is_intersecting(fam));
}

TEST_CASE("closure operator") {
  SetFamily empty;
  empty.n = 4;
  empty.k = 2;
  CHECK(closure_I(empty, 4, 2).size() == 6);  // vacuous: all of C([4],2)

  const auto star = ekr_star(5, 2, 1);
  CHECK(closure_I(star, 5, 2) == star);  // stars are closed for n >= 2k

  // closure is antitone: fewer constraints, larger closure
  SetFamily sub;
  sub.n = 5;
  sub.k = 2;
  sub.add(star.sets[0]);
  const auto closed = closure_I(sub, 5, 2);
  for (const auto& s : star.sets) CHECK(closed.contains(s));
  CHECK(closed.size() >= star.size());
}

TEST_CASE("maximality predicate") {
  CHECK(is_maximal_intersecting(triangle(), 3, 2));
  CHECK(is_maximal_intersecting(ekr_star(5, 2, 1), 5, 2));
  SetFamily sub;
  sub.n = 5;
  sub.k = 2;
  sub.add(ElementSet{1, 2});
  CHECK(!is_maximal_intersecting(sub, 5, 2));

  // the unique maximal family at (5,3) is all of C([5],3)
  SetFamily full;
  full.n = 5;
  full.k = 3;
  for (const auto& s : ksubsets_colex(5, 3)) full.add(s);
  CHECK(is_maximal_intersecting(full, 5, 3));
}

TEST_CASE("covering number") {
  CHECK(covering_number(triangle()).size == 2);
  const auto star = ekr_star(7, 3, 2);
  const auto t = covering_number(star);
  CHECK(t.size == 1);
  CHECK(t.witness.contains(2));
  CHECK(covering_number(tuza_tau_k_family(3)).size == 3);
  // witness really covers
  const auto fam = tuza_tau_k_family(4);
  const auto tw = covering_number(fam);
  CHECK(tw.size == 4);
  for (const auto& s : fam.sets) CHECK(s.intersects(tw.witness));
}

TEST_CASE("minimal generator properties over a full catalog") {
  for (auto [n, k] : {std::pair{5, 2}, std::pair{6, 2}, std::pair{5, 3}}) {
    catalog_maximal_families(n, k, [&, n = n, k = k](const SetFamily& fam) {
      const auto gw = minimal_generator(fam, n, k);
      CHECK(gw.generator.size() <= fam.size());
      CHECK(closure_I(gw.generator, n, k) == fam);
      // dropping any single member strictly enlarges the closure
      for (std::size_t i = 0; i < gw.generator.size(); ++i) {
        SetFamily smaller;
        smaller.n = n;
        smaller.k = k;
        for (std::size_t j = 0; j < gw.generator.size(); ++j)
          if (j != i) smaller.add(gw.generator.sets[j]);
        CHECK(closure_I(smaller, n, k) != fam);
      }
      REQUIRE(gw.witnesses.size() == gw.generator.size());
      for (std::size_t i = 0; i < gw.witnesses.size(); ++i) {
        CHECK(!fam.contains(gw.witnesses[i]));
        CHECK(gw.witnesses[i].disjoint(gw.generator.sets[i]));
        for (std::size_t j = 0; j < gw.generator.size(); ++j)
          if (j != i) CHECK(gw.witnesses[i].intersects(gw.generator.sets[j]));
      }
      const auto sys = witness_pair_system(gw, k);
      CHECK(verify_flavor(sys, PairFlavor::Cross).ok);
      CHECK(bollobas_weight(sys) <= 1);
      CHECK(verify_flavor(doubled_skew_system(gw, k), PairFlavor::Skew).ok);
    });
  }
}

TEST_CASE("minimal generator refuses non-maximal input") {
  SetFamily sub;
  sub.n = 5;
  sub.k = 2;
  sub.add(ElementSet{1, 2});
  CHECK_THROWS(minimal_generator(sub, 5, 2));
}
