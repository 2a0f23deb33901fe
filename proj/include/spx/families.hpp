#pragma once

#include <utility>
#include <vector>

#include "spx/pair_system.hpp"
#include "spx/set_family.hpp"

namespace spx {

/// I(fam): all k-subsets of [n] meeting every member of fam. For an
/// empty family the condition is vacuous and all of C([n],k) is returned.
SetFamily closure_I(const SetFamily& fam, int n, int k);

/// fam is maximal intersecting iff it is intersecting and I(fam) = fam.
bool is_maximal_intersecting(const SetFamily& fam, int n, int k);

struct Transversal {
  int size = 0;
  ElementSet witness;
};

/// Exact covering number tau via element branch-and-bound; the family
/// must be nonempty.
Transversal covering_number(const SetFamily& fam);

struct GeneratorWitness {
  SetFamily generator;                // F_0
  std::vector<ElementSet> witnesses;  // G_i: meets all of F_0 except F_i
};

/// Deterministic minimal generator of a maximal intersecting family:
/// greedily drop members in colex-rank order while the closure stays
/// equal to fam. Witness G_i is the colex-smallest member of
/// I(F_0 \ {F_i}) \ fam. Throws on non-maximal input.
GeneratorWitness minimal_generator(const SetFamily& fam, int n, int k);

/// The (k,k) pair system {(F_i, G_i)} of a generator witness.
SetPairSystem witness_pair_system(const GeneratorWitness& gw, int k);

/// The doubled skew system {(F_i, G_i)} followed by {(G_i, F_i)}.
SetPairSystem doubled_skew_system(const GeneratorWitness& gw, int k);

}  // namespace spx
