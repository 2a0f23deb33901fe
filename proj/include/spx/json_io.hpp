#pragma once

#include <string>

#include <json.hpp>

#include "spx/bounds.hpp"
#include "spx/families.hpp"
#include "spx/pair_system.hpp"
#include "spx/search.hpp"
#include "spx/set_family.hpp"

namespace spx {

// Wire formats. Big integers travel as decimal strings to stay exact.

nlohmann::json to_json(const ElementSet& s);
ElementSet element_set_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SetFamily& fam);
SetFamily family_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SetPairSystem& sys);
SetPairSystem system_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FlavorVerdict& v);
nlohmann::json to_json(const BoundReport& r, bool with_anchor = true);
nlohmann::json to_json(const SearchResult& r);
nlohmann::json to_json(const PeelTrace& t);
nlohmann::json to_json(const AlphaBetaProfile& p);
nlohmann::json to_json(const GeneratorWitness& gw);

}  // namespace spx
