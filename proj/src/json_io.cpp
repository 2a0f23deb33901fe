#include "spx/json_io.hpp"

#include <stdexcept>

namespace spx {

using nlohmann::json;

json to_json(const ElementSet& s) {
  json arr = json::array();
  for (int e : s.elements()) arr.push_back(e);
  return arr;
}

ElementSet element_set_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("ElementSet JSON must be an array");
  ElementSet s;
  for (const auto& e : j) s.add(e.get<int>());
  return s;
}

json to_json(const SetFamily& fam) {
  json j;
  j["n"] = fam.n;
  if (fam.k) j["k"] = *fam.k;
  json sets = json::array();
  for (const auto& s : fam.sets) sets.push_back(to_json(s));
  j["sets"] = sets;
  return j;
}

SetFamily family_from_json(const json& j) {
  SetFamily fam;
  fam.n = j.at("n").get<int>();
  if (j.contains("k") && !j["k"].is_null()) fam.k = j["k"].get<int>();
  for (const auto& s : j.at("sets")) fam.add(element_set_from_json(s));
  return fam;
}

json to_json(const SetPairSystem& sys) {
  json j;
  j["k"] = sys.k;
  j["l"] = sys.l;
  j["flavor"] = flavor_name(sys.flavor_claim);
  json pairs = json::array();
  for (const auto& p : sys.pairs)
    pairs.push_back(json{{"A", to_json(p.A)}, {"B", to_json(p.B)}});
  j["pairs"] = pairs;
  return j;
}

SetPairSystem system_from_json(const json& j) {
  SetPairSystem sys;
  sys.k = j.at("k").get<int>();
  sys.l = j.at("l").get<int>();
  const auto flavor = flavor_from_name(j.at("flavor").get<std::string>());
  if (!flavor) throw std::invalid_argument("unknown flavor in system JSON");
  sys.flavor_claim = *flavor;
  for (const auto& p : j.at("pairs"))
    sys.pairs.push_back({element_set_from_json(p.at("A")),
                         element_set_from_json(p.at("B"))});
  sys.check_caps();
  return sys;
}

json to_json(const FlavorVerdict& v) {
  json j;
  j["ok"] = v.ok;
  if (!v.ok) {
    j["violating_i"] = v.violating_i;
    j["violating_j"] = v.violating_j;
    j["reason"] = v.reason;
  }
  return j;
}

json to_json(const BoundReport& r, bool with_anchor) {
  json j;
  j["name"] = r.name;
  if (r.k) j["k"] = *r.k;
  if (r.l) j["l"] = *r.l;
  if (r.n) j["n"] = *r.n;
  switch (r.kind) {
    case BoundReport::Kind::Exact:
      j["kind"] = "exact";
      j["value"] = to_string(r.exact);
      break;
    case BoundReport::Kind::Rational:
      j["kind"] = "rational";
      j["value"] = to_string(r.rational);
      break;
    case BoundReport::Kind::Log2:
      j["kind"] = "log2";
      j["value"] = r.log2_value;
      break;
  }
  if (with_anchor) j["anchor"] = r.anchor;
  if (!r.flags.empty()) j["flags"] = r.flags;
  return j;
}

json to_json(const SearchResult& r) {
  json j;
  j["quantity"] = quantity_name(r.quantity);
  if (r.n) j["n"] = *r.n;
  if (r.k) j["k"] = *r.k;
  if (r.l) j["l"] = *r.l;
  j["value"] = to_string(r.value);
  j["proven_optimal"] = r.proven_optimal;
  j["nodes_explored"] = r.nodes_explored;
  j["wall_ms"] = r.wall_ms;
  if (r.family_witness) j["witness"] = to_json(*r.family_witness);
  if (r.system_witness) j["witness"] = to_json(*r.system_witness);
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

json to_json(const PeelTrace& t) {
  json j;
  j["vertex_count"] = t.vertex_count;
  j["level_size_sum"] = to_string(t.level_size_sum);
  j["sum_matches_vertex_count"] = t.sum_matches_vertex_count;
  json levels = json::array();
  for (const auto& lv : t.levels) {
    json lj;
    lj["level"] = lv.level;
    lj["surviving"] = lv.surviving;
    json removed = json::array();
    for (const auto& [i, x] : lv.removed)
      removed.push_back(json{{"index", i}, {"point", x}});
    lj["removed"] = removed;
    json classes = json::array();
    for (const auto& [ab, c] : lv.class_sizes)
      classes.push_back(json{{"a", ab.first}, {"b", ab.second}, {"count", c}});
    lj["classes"] = classes;
    levels.push_back(lj);
  }
  j["levels"] = levels;
  return j;
}

json to_json(const AlphaBetaProfile& p) {
  return json{{"alpha", p.alpha}, {"beta", p.beta}};
}

json to_json(const GeneratorWitness& gw) {
  json j;
  j["generator"] = to_json(gw.generator);
  json w = json::array();
  for (const auto& g : gw.witnesses) w.push_back(to_json(g));
  j["witnesses"] = w;
  return j;
}

}  // namespace spx
