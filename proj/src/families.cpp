#include "spx/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "spx/combinatorics.hpp"

namespace spx {

SetFamily closure_I(const SetFamily& fam, int n, int k) {
  SetFamily out;
  out.n = n;
  out.k = k;
  ColexKSubsets stream(n, k);
  ElementSet cand;
  while (stream.next(cand)) {
    bool blocks_all = true;
    for (const auto& f : fam.sets) {
      if (!cand.intersects(f)) {
        blocks_all = false;
        break;
      }
    }
    if (blocks_all) out.sets.push_back(cand);
  }
  return out;
}

bool is_maximal_intersecting(const SetFamily& fam, int n, int k) {
  if (!is_intersecting(fam)) return false;
  return closure_I(fam, n, k) == fam;
}

namespace {

void tau_search(const std::vector<ElementSet>& sets, ElementSet& picked,
                int picked_size, Transversal& best) {
  if (picked_size >= best.size) return;  // cannot improve
  // first member not hit by the current partial transversal
  const ElementSet* uncovered = nullptr;
  for (const auto& s : sets) {
    if (!s.intersects(picked)) {
      if (!uncovered || s.size() < uncovered->size()) uncovered = &s;
    }
  }
  if (!uncovered) {
    best.size = picked_size;
    best.witness = picked;
    return;
  }
  for (int e : uncovered->elements()) {
    picked.add(e);
    tau_search(sets, picked, picked_size + 1, best);
    picked.remove(e);
  }
}

}  // namespace

Transversal covering_number(const SetFamily& fam) {
  if (fam.sets.empty())
    throw std::invalid_argument("covering_number: empty family");
  // greedy upper bound: any single member is a transversal of an
  // intersecting family, but start from the trivial all-elements bound
  Transversal best;
  best.witness = fam.ground_union();
  best.size = static_cast<int>(best.witness.size());
  ElementSet picked;
  tau_search(fam.sets, picked, 0, best);
  return best;
}

GeneratorWitness minimal_generator(const SetFamily& fam, int n, int k) {
  if (!is_maximal_intersecting(fam, n, k))
    throw std::invalid_argument("minimal_generator: family is not maximal intersecting");

  std::vector<ElementSet> members = fam.sets;
  std::sort(members.begin(), members.end(),
            [](const ElementSet& a, const ElementSet& b) { return colex_less(a, b); });

  // One pass suffices: closure is antitone, so a member that cannot be
  // dropped now can never be dropped later.
  SetFamily gen;
  gen.n = n;
  gen.k = k;
  gen.sets = members;
  for (std::size_t i = 0; i < gen.sets.size();) {
    SetFamily trial = gen;
    trial.sets.erase(trial.sets.begin() + static_cast<std::ptrdiff_t>(i));
    if (closure_I(trial, n, k) == fam) {
      gen = std::move(trial);
    } else {
      ++i;
    }
  }

  GeneratorWitness gw;
  gw.generator = gen;
  for (std::size_t i = 0; i < gen.sets.size(); ++i) {
    SetFamily without = gen;
    without.sets.erase(without.sets.begin() + static_cast<std::ptrdiff_t>(i));
    const SetFamily closed = closure_I(without, n, k);
    const ElementSet* witness = nullptr;
    for (const auto& g : closed.sets) {
      if (!fam.contains(g)) {
        witness = &g;  // colex stream order, so the first hit is smallest
        break;
      }
    }
    if (!witness)
      throw std::logic_error("minimal_generator: minimality without a witness");
    gw.witnesses.push_back(*witness);
  }
  return gw;
}

SetPairSystem witness_pair_system(const GeneratorWitness& gw, int k) {
  SetPairSystem sys;
  sys.k = k;
  sys.l = k;
  sys.flavor_claim = PairFlavor::Cross;
  for (std::size_t i = 0; i < gw.generator.sets.size(); ++i)
    sys.pairs.push_back({gw.generator.sets[i], gw.witnesses[i]});
  return sys;
}

SetPairSystem doubled_skew_system(const GeneratorWitness& gw, int k) {
  SetPairSystem sys = witness_pair_system(gw, k);
  sys.flavor_claim = PairFlavor::Skew;
  const std::size_t s = gw.generator.sets.size();
  for (std::size_t i = 0; i < s; ++i)
    sys.pairs.push_back({gw.witnesses[i], gw.generator.sets[i]});
  return sys;
}

}  // namespace spx
