#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "spx/bigint.hpp"
#include "spx/pair_system.hpp"
#include "spx/set_family.hpp"

namespace spx {

enum class Quantity { M, F, G, NCross, NSkew, NWeakly };

std::string quantity_name(Quantity q);
std::optional<Quantity> quantity_from_name(const std::string& name);

struct SearchResult {
  Quantity quantity = Quantity::M;
  std::optional<long long> n;
  std::optional<int> k, l;
  BigCount value;
  std::optional<SetFamily> family_witness;
  std::optional<SetPairSystem> system_witness;
  bool proven_optimal = false;
  std::uint64_t nodes_explored = 0;
  double wall_ms = 0.0;
  std::vector<std::string> notes;
};

struct SearchBudget {
  std::uint64_t max_nodes = 50'000'000;
  int workers = 1;
};

/// Exact M(n,k): maximal intersecting k-uniform families on [n] are the
/// maximal cliques of the intersection graph on colex-indexed k-subsets
/// (the complement of the Kneser graph). Counted by Bron-Kerbosch with
/// greedy pivoting on bitset adjacency. Refuses when C(n,k) exceeds
/// `vertex_budget`.
SearchResult count_maximal_intersecting(int n, int k, const SearchBudget& budget = {},
                                        int vertex_budget = 200);

/// Independent oracle: scans all 2^C(n,k) subfamilies and tests each with
/// the closure-based maximality predicate. Requires C(n,k) <= 20.
BigCount naive_count_maximal(int n, int k);

/// Second independent enumerator: repeatedly closes the current family
/// and branches on including/excluding the colex-smallest addable set.
BigCount closure_fixpoint_count_maximal(int n, int k);

/// Streams every maximal intersecting family at (n,k).
void catalog_maximal_families(int n, int k,
                              const std::function<void(const SetFamily&)>& emit,
                              int vertex_budget = 200);

/// Exact maximum vertex-set size over (k,l) systems of the given flavor,
/// by branch-and-bound in first-appearance canonical form. Optimality is
/// certified either by exhausting the canonical space or by meeting a
/// proven upper bound (bound certificates are only trusted for k >= 2,
/// where the paper formulas have no anomalies).
SearchResult search_vertex_max(int k, int l, PairFlavor flavor,
                               const SearchBudget& budget = {});

/// Exact max union size of a k-uniform intersecting family with tau = k.
/// The universe is capped at ceil((3/2) C(2k-2,k-1)) + 2k; results are
/// flagged if the search saturates the cap.
SearchResult search_f(int k, const SearchBudget& budget = {});

/// Exact max of |union of A_i| over (k,k)-cross systems whose first
/// coordinates are intersecting.
SearchResult search_g(int k, const SearchBudget& budget = {});

}  // namespace spx
