#include "spx/pair_system.hpp"

#include <map>
#include <stdexcept>

#include "spx/combinatorics.hpp"

namespace spx {

std::string flavor_name(PairFlavor f) {
  switch (f) {
    case PairFlavor::Cross: return "cross";
    case PairFlavor::Skew: return "skew";
    case PairFlavor::Weakly: return "weakly";
  }
  return "?";
}

std::optional<PairFlavor> flavor_from_name(const std::string& name) {
  if (name == "cross") return PairFlavor::Cross;
  if (name == "skew") return PairFlavor::Skew;
  if (name == "weakly") return PairFlavor::Weakly;
  return std::nullopt;
}

void SetPairSystem::check_caps() const {
  for (const auto& p : pairs) {
    if (static_cast<int>(p.A.size()) > k || static_cast<int>(p.B.size()) > l)
      throw std::invalid_argument("SetPairSystem: pair exceeds (k,l) size caps");
  }
}

FlavorVerdict verify_flavor(const SetPairSystem& sys, PairFlavor flavor) {
  const int m = static_cast<int>(sys.pairs.size());
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) {
        if (sys.pairs[i].A.intersects(sys.pairs[i].B))
          return {false, i, i, "A_i and B_i are not disjoint"};
        continue;
      }
      bool need_check = false;
      bool holds = true;
      switch (flavor) {
        case PairFlavor::Cross:
          need_check = true;
          holds = sys.pairs[i].A.intersects(sys.pairs[j].B);
          break;
        case PairFlavor::Skew:
          need_check = i < j;
          holds = sys.pairs[i].A.intersects(sys.pairs[j].B);
          break;
        case PairFlavor::Weakly:
          need_check = i < j;  // the condition is symmetric in (i, j)
          holds = sys.pairs[i].A.intersects(sys.pairs[j].B) ||
                  sys.pairs[j].A.intersects(sys.pairs[i].B);
          break;
      }
      if (need_check && !holds)
        return {false, i, j, "intersection condition fails"};
    }
  }
  return {};
}

BigRational bollobas_weight(const SetPairSystem& sys) {
  BigRational w = 0;
  for (const auto& p : sys.pairs) {
    if (p.A.intersects(p.B))
      throw std::invalid_argument("bollobas_weight: a pair violates A_i * B_i = empty");
    const long long a = static_cast<long long>(p.A.size());
    const long long b = static_cast<long long>(p.B.size());
    w += BigRational(1, binomial(a + b, a));
  }
  return w;
}

ElementSet vertex_set(const SetPairSystem& sys) {
  ElementSet v;
  for (const auto& p : sys.pairs) {
    v.unite(p.A);
    v.unite(p.B);
  }
  return v;
}

AlphaBetaProfile alpha_beta_profile(const SetPairSystem& sys) {
  AlphaBetaProfile out;
  out.alpha.assign(static_cast<std::size_t>(std::max(sys.k, 0)), 0);
  out.beta.assign(static_cast<std::size_t>(std::max(sys.l, 0)), 0);
  ElementSet seen;
  for (const auto& p : sys.pairs) {
    const std::size_t new_a = p.A.minus(seen).size();
    for (std::size_t t = 1; t <= new_a && t <= out.alpha.size(); ++t) ++out.alpha[t - 1];
    seen.unite(p.A);
    const std::size_t new_b = p.B.minus(seen).size();
    for (std::size_t t = 1; t <= new_b && t <= out.beta.size(); ++t) ++out.beta[t - 1];
    seen.unite(p.B);
  }
  return out;
}

PeelTrace peel_decomposition(const SetPairSystem& sys) {
  if (!verify_flavor(sys, PairFlavor::Skew).ok &&
      !verify_flavor(sys, PairFlavor::Weakly).ok)
    throw std::invalid_argument("peel_decomposition: system is neither skew nor weakly");

  PeelTrace trace;
  trace.vertex_count = vertex_set(sys).size();
  trace.level_size_sum = 0;

  const int m = static_cast<int>(sys.pairs.size());
  std::vector<ElementSet> unions(m);
  std::vector<int> survivors(m);
  for (int i = 0; i < m; ++i) {
    unions[i] = sys.pairs[i].A.united(sys.pairs[i].B);
    survivors[i] = i;
  }
  std::vector<ElementSet> peeled_a, peeled_b;
  peeled_a.reserve(m);
  peeled_b.reserve(m);
  for (const auto& p : sys.pairs) {
    peeled_a.push_back(p.A);
    peeled_b.push_back(p.B);
  }

  const int depth = sys.k + sys.l - 1;
  for (int j = 1; j <= depth; ++j) {
    // S_j: drop indices greedily while the union is preserved
    ElementSet total;
    for (int i : survivors) total.unite(unions[i]);
    std::vector<int> kept = survivors;
    for (std::size_t pos = 0; pos < kept.size();) {
      ElementSet without;
      for (std::size_t q = 0; q < kept.size(); ++q)
        if (q != pos) without.unite(unions[kept[q]]);
      if (without == total) {
        kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(pos));
      } else {
        ++pos;
      }
    }

    PeelLevel level;
    level.level = j;
    level.surviving = kept;

    // each kept index owns at least one private point; remove the smallest
    std::map<std::pair<int, int>, std::uint64_t> classes;
    for (std::size_t q = 0; q < kept.size(); ++q) {
      const int i = kept[q];
      ElementSet others;
      for (std::size_t r = 0; r < kept.size(); ++r)
        if (r != q) others.unite(unions[kept[r]]);
      const ElementSet priv = unions[i].minus(others);
      const int x = priv.min_element();
      if (x == 0)
        throw std::logic_error("peel_decomposition: minimal set lost privacy");
      level.removed.emplace_back(i, x);
    }
    for (auto& [i, x] : level.removed) {
      peeled_a[i].remove(x);
      peeled_b[i].remove(x);
      unions[i].remove(x);
      // class of (A_i^j, B_i^j) in M_j, after the level's removal
      const int a = static_cast<int>(sys.pairs[i].A.size() - peeled_a[i].size());
      const int b = static_cast<int>(sys.pairs[i].B.size() - peeled_b[i].size());
      ++classes[{a, b}];
    }
    for (const auto& [ab, c] : classes) level.class_sizes.emplace_back(ab, c);

    trace.level_size_sum += static_cast<long long>(kept.size());
    survivors = std::move(kept);
    trace.levels.push_back(std::move(level));
    if (survivors.empty()) break;
  }

  trace.sum_matches_vertex_count = trace.level_size_sum == trace.vertex_count;
  return trace;
}

}  // namespace spx
