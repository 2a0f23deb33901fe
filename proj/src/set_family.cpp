#include "spx/set_family.hpp"

#include <algorithm>
#include <stdexcept>

namespace spx {

bool SetFamily::contains(const ElementSet& s) const {
  return std::find(sets.begin(), sets.end(), s) != sets.end();
}

void SetFamily::add(const ElementSet& s) {
  if (k && static_cast<int>(s.size()) != *k)
    throw std::invalid_argument("SetFamily: member breaks k-uniformity");
  if (s.max_element() > n)
    throw std::invalid_argument("SetFamily: member exceeds the universe");
  if (contains(s)) throw std::invalid_argument("SetFamily: duplicate member");
  sets.push_back(s);
}

ElementSet SetFamily::ground_union() const {
  ElementSet u;
  for (const auto& s : sets) u.unite(s);
  return u;
}

bool SetFamily::operator==(const SetFamily& o) const {
  if (sets.size() != o.sets.size()) return false;
  for (const auto& s : sets)
    if (!o.contains(s)) return false;
  return true;
}

bool is_intersecting(const SetFamily& fam) {
  for (std::size_t i = 0; i < fam.sets.size(); ++i)
    for (std::size_t j = i + 1; j < fam.sets.size(); ++j)
      if (!fam.sets[i].intersects(fam.sets[j])) return false;
  return true;
}

}  // namespace spx
