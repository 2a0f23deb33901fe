#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spx/bounds.hpp"
#include "spx/combinatorics.hpp"
#include "spx/families.hpp"
#include "spx/search.hpp"

using namespace spx;

TEST_CASE("M(n,k) against the naive subfamily oracle") {
  for (auto [n, k] : {std::pair{3, 2}, std::pair{4, 2}, std::pair{5, 2},
                      std::pair{6, 2}, std::pair{5, 3}}) {
    CHECK(count_maximal_intersecting(n, k).value == naive_count_maximal(n, k));
  }
  CHECK(count_maximal_intersecting(5, 2).value == 15);
  CHECK(count_maximal_intersecting(5, 3).value == 1);
}

TEST_CASE("M(n,k) against the closure-fixpoint oracle") {
  for (auto [n, k] : {std::pair{4, 2}, std::pair{5, 2}, std::pair{6, 2},
                      std::pair{5, 3}, std::pair{6, 3}}) {
    CHECK(count_maximal_intersecting(n, k).value ==
          closure_fixpoint_count_maximal(n, k));
  }
}

TEST_CASE("M(n,2) closed form") {
  for (int n = 4; n <= 9; ++n)
    CHECK(count_maximal_intersecting(n, 2).value == BigCount(n) + binomial(n, 3));
}

TEST_CASE("clique counts are independent of the worker pool size") {
  const auto reference = count_maximal_intersecting(7, 3).value;
  for (int workers = 1; workers <= 4; ++workers) {
    SearchBudget b;
    b.workers = workers;
    CHECK(count_maximal_intersecting(7, 3, b).value == reference);
  }
}

TEST_CASE("oracle guardrails") {
  CHECK_THROWS_AS(naive_count_maximal(7, 3), std::invalid_argument);   // C(7,3) > 20
  CHECK_THROWS_AS(count_maximal_intersecting(30, 4), std::invalid_argument);
}

TEST_CASE("catalog matches the count and yields only maximal families") {
  std::size_t seen = 0;
  catalog_maximal_families(6, 2, [&](const SetFamily& fam) {
    ++seen;
    CHECK(is_maximal_intersecting(fam, 6, 2));
  });
  CHECK(BigCount(seen) == count_maximal_intersecting(6, 2).value);
}

TEST_CASE("cross union maxima") {
  const auto r11 = search_vertex_max(1, 1, PairFlavor::Cross);
  CHECK(r11.value == 2);
  CHECK(r11.proven_optimal);  // exhaustion: the k=1 formulas are not trusted

  const auto r22 = search_vertex_max(2, 2, PairFlavor::Cross);
  CHECK(r22.value == 6);
  CHECK(r22.proven_optimal);
  REQUIRE(r22.system_witness.has_value());
  CHECK(verify_flavor(*r22.system_witness, PairFlavor::Cross).ok);
  CHECK(vertex_set(*r22.system_witness).size() == 6);

  // ({1},{2,5}), ({2},{1,6}) reaches 4; three pairs force B_j = A-set
  // complements and cap the union at 3. Another k=1 formula anomaly.
  const auto r12 = search_vertex_max(1, 2, PairFlavor::Cross);
  CHECK(r12.proven_optimal);
  CHECK(r12.value == 4);
  CHECK(tuza_n_bounds(1, 2).upper == 1);
  CHECK(tuza_n_bounds(1, 2).anomaly);
}

TEST_CASE("skew union maxima") {
  const auto r11 = search_vertex_max(1, 1, PairFlavor::Skew);
  CHECK(r11.value == 3);  // beats the k=1 formula value 2
  CHECK(r11.proven_optimal);
  CHECK(n1_bounds(1, 1).crossed);

  // three pairs: B3 = {A1,A2}, B2 = {A1, fresh}, B1 all fresh -> 6 points,
  // matching the lower-bound formula; the k=1 upper formula gives only 5
  const auto r12 = search_vertex_max(1, 2, PairFlavor::Skew);
  CHECK(r12.proven_optimal);
  CHECK(r12.value == 6);
  CHECK(n1_bounds(1, 2).crossed);
  REQUIRE(r12.system_witness.has_value());
  CHECK(verify_flavor(*r12.system_witness, PairFlavor::Skew).ok);
}

TEST_CASE("weakly union maxima") {
  // with singleton pairs each B equals an A label (or at most one B is
  // fresh, which caps m at 2), so the union tops out at 3 — below the
  // k=1 reading of the lower-bound formula (4): another k=1 anomaly
  const auto r11 = search_vertex_max(1, 1, PairFlavor::Weakly);
  CHECK(r11.value == 3);
  CHECK(r11.proven_optimal);
  CHECK(n2_lower(1, 1) == 4);
  REQUIRE(r11.system_witness.has_value());
  CHECK(verify_flavor(*r11.system_witness, PairFlavor::Weakly).ok);
}

TEST_CASE("search refusals outside desk scale") {
  CHECK_THROWS_AS(search_vertex_max(3, 4, PairFlavor::Cross), std::invalid_argument);
  CHECK_THROWS_AS(search_f(4), std::invalid_argument);
  CHECK_THROWS_AS(search_g(3), std::invalid_argument);
}

TEST_CASE("f(2) and g(k)") {
  const auto f2 = search_f(2);
  CHECK(f2.value == 3);
  CHECK(f2.proven_optimal);
  REQUIRE(f2.family_witness.has_value());
  CHECK(f2.family_witness->ground_union().size() == 3);
  CHECK(covering_number(*f2.family_witness).size == 2);
  CHECK(is_intersecting(*f2.family_witness));

  CHECK(search_g(1).value == 1);
  const auto g2 = search_g(2);
  CHECK(g2.value == 4);
  CHECK(g2.proven_optimal);
}

TEST_CASE("budget exhaustion is reported, not hidden") {
  SearchBudget tiny;
  tiny.max_nodes = 1;
  const auto r = search_vertex_max(2, 2, PairFlavor::Weakly, tiny);
  CHECK(!r.proven_optimal);
  bool noted = false;
  for (const auto& n : r.notes)
    noted = noted || n.find("budget exhausted") != std::string::npos;
  CHECK(noted);
}

TEST_CASE("quantity names") {
  CHECK(quantity_from_name("M") == Quantity::M);
  CHECK(quantity_from_name("n1") == Quantity::NSkew);
  CHECK(!quantity_from_name("nope"));
  CHECK(quantity_name(Quantity::NWeakly) == "n2");
}
