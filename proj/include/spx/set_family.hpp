#pragma once

#include <optional>
#include <vector>

#include "spx/element_set.hpp"

namespace spx {

/// A list of distinct sets over the ground set [n], optionally k-uniform.
struct SetFamily {
  int n = 0;
  std::optional<int> k;
  std::vector<ElementSet> sets;

  [[nodiscard]] std::size_t size() const { return sets.size(); }
  [[nodiscard]] bool contains(const ElementSet& s) const;

  /// Appends a member; throws on duplicates, uniformity or universe breaks.
  void add(const ElementSet& s);

  /// Union of all members.
  [[nodiscard]] ElementSet ground_union() const;

  bool operator==(const SetFamily& o) const;
};

/// True iff every two members share an element.
bool is_intersecting(const SetFamily& fam);

}  // namespace spx
