#include "spx/constructions.hpp"

#include <numeric>
#include <stdexcept>

#include "spx/combinatorics.hpp"

namespace spx {

SetFamily tuza_tau_k_family(int k) {
  if (k < 2) throw std::invalid_argument("tuza_tau_k_family: k must be >= 2");
  const int base = 2 * k - 2;
  SetFamily fam;
  fam.k = k;
  int next_fresh = base;
  ColexKSubsets stream(base, k - 1);
  ElementSet half;
  std::vector<ElementSet> members;
  while (stream.next(half)) {
    if (!half.contains(1)) continue;  // one representative per partition
    ++next_fresh;
    ElementSet full;
    for (int e = 1; e <= base; ++e) full.add(e);
    ElementSet first = half;
    first.add(next_fresh);
    ElementSet second = full.minus(half);
    second.add(next_fresh);
    members.push_back(first);
    members.push_back(second);
  }
  fam.n = next_fresh;
  for (const auto& s : members) fam.add(s);
  return fam;
}

SetPairSystem erdos_lovasz_pairs(int k) {
  if (k < 2) throw std::invalid_argument("erdos_lovasz_pairs: k must be >= 2");
  const int base = 2 * k - 2;
  SetPairSystem sys;
  sys.k = k;
  sys.l = k;
  sys.flavor_claim = PairFlavor::Cross;
  ElementSet full;
  for (int e = 1; e <= base; ++e) full.add(e);
  int next_fresh = base;
  ColexKSubsets stream(base, k - 1);
  ElementSet aprime;
  while (stream.next(aprime)) {
    ElementSet a = aprime;
    a.add(++next_fresh);
    ElementSet b = full.minus(aprime);
    b.add(++next_fresh);
    sys.pairs.push_back({a, b});
  }
  return sys;
}

SetPairSystem colex_skew_system(int k, int l) {
  if (k < 1 || l < 1)
    throw std::invalid_argument("colex_skew_system: k and l must be positive");
  const int base = k + l;
  SetPairSystem sys;
  sys.k = k;
  sys.l = l;
  sys.flavor_claim = PairFlavor::Skew;
  int next_fresh = base;
  ColexKSubsets stream(base, k);
  ElementSet a;
  while (stream.next(a)) {
    ElementSet b;
    for (int e = 1; e <= a.max_element(); ++e)
      if (!a.contains(e)) b.add(e);
    while (static_cast<int>(b.size()) < l) b.add(++next_fresh);
    sys.pairs.push_back({a, b});
  }
  return sys;
}

namespace {

// Kuhn's augmenting-path matching; adj[u] lists right vertices.
bool try_augment(int u, const std::vector<std::vector<int>>& adj,
                 std::vector<int>& match_right, std::vector<char>& visited) {
  for (int v : adj[u]) {
    if (visited[v]) continue;
    visited[v] = 1;
    if (match_right[v] < 0 ||
        try_augment(match_right[v], adj, match_right, visited)) {
      match_right[v] = u;
      return true;
    }
  }
  return false;
}

SetPairSystem build_triples(int k, int l, int rotation) {
  const int base = k + l - 1;
  const auto lefts = ksubsets_colex(base, k - 1);
  const auto rights = ksubsets_colex(base, l - 1);
  std::vector<std::vector<int>> adj(lefts.size());
  for (std::size_t i = 0; i < lefts.size(); ++i)
    for (std::size_t j = 0; j < rights.size(); ++j)
      if (lefts[i].disjoint(rights[j])) adj[i].push_back(static_cast<int>(j));

  std::vector<int> match_right(rights.size(), -1);
  const int m = static_cast<int>(lefts.size());
  for (int off = 0; off < m; ++off) {
    const int u = (off + rotation) % m;
    std::vector<char> visited(rights.size(), 0);
    if (!try_augment(u, adj, match_right, visited))
      throw std::logic_error("weakly_triple_system: Hall condition failed unexpectedly");
  }
  std::vector<int> match_left(lefts.size(), -1);
  for (std::size_t v = 0; v < match_right.size(); ++v)
    if (match_right[v] >= 0) match_left[match_right[v]] = static_cast<int>(v);

  SetPairSystem sys;
  sys.k = k;
  sys.l = l;
  sys.flavor_claim = PairFlavor::Weakly;
  int next_fresh = base;
  for (std::size_t i = 0; i < lefts.size(); ++i) {
    const ElementSet& ap = lefts[i];
    const ElementSet& bp = rights[static_cast<std::size_t>(match_left[i])];
    const int x = ++next_fresh;
    const int y = ++next_fresh;
    const int z = ++next_fresh;
    auto with = [](const ElementSet& s, int e) {
      ElementSet r = s;
      r.add(e);
      return r;
    };
    sys.pairs.push_back({with(ap, x), with(bp, y)});
    sys.pairs.push_back({with(ap, y), with(bp, z)});
    sys.pairs.push_back({with(ap, z), with(bp, x)});
  }
  return sys;
}

}  // namespace

SetPairSystem weakly_triple_system(int k, int l) {
  if (k < 1 || l < k)
    throw std::invalid_argument("weakly_triple_system: requires 1 <= k <= l");
  // the weakly property of the emitted system is re-verified per instance;
  // if a particular matching fails it, retry from a rotated vertex order
  constexpr int kMaxRetries = 8;
  for (int rotation = 0; rotation < kMaxRetries; ++rotation) {
    SetPairSystem sys = build_triples(k, l, rotation);
    if (verify_flavor(sys, PairFlavor::Weakly).ok) return sys;
  }
  throw std::runtime_error(
      "weakly_triple_system: no tried matching yields a weakly system");
}

SetFamily ekr_star(int n, int k, int e) {
  if (e < 1 || e > n || k < 1 || k > n)
    throw std::invalid_argument("ekr_star: requires 1 <= e <= n and 1 <= k <= n");
  SetFamily fam;
  fam.n = n;
  fam.k = k;
  ColexKSubsets stream(n, k);
  ElementSet s;
  while (stream.next(s))
    if (s.contains(e)) fam.sets.push_back(s);
  return fam;
}

}  // namespace spx
