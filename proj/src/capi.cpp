#include "spx/setpair.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "spx/acceptance.hpp"
#include "spx/bounds.hpp"
#include "spx/constructions.hpp"
#include "spx/families.hpp"
#include "spx/json_io.hpp"
#include "spx/search.hpp"

using nlohmann::json;

struct spx_context {
  std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (buf) std::memcpy(buf, s.c_str(), s.size() + 1);
  return buf;
}

void emit(char** out, const json& j) {
  if (out) *out = dup_string(j.dump());
}

int classify(const std::exception& e) {
  // hard size/node refusals mention their budget in the message
  return std::string(e.what()).find("budget") != std::string::npos ? SPX_BUDGET
                                                                   : SPX_USAGE;
}

template <typename Fn>
int guarded(spx_context* ctx, const char* request, char** out, Fn&& fn) {
  if (!ctx) return SPX_USAGE;
  ctx->last_error.clear();
  if (out) *out = nullptr;
  if (!request) {
    ctx->last_error = "null request";
    return SPX_USAGE;
  }
  try {
    return fn(json::parse(request));
  } catch (const json::exception& e) {
    ctx->last_error = e.what();
    return SPX_USAGE;
  } catch (const std::invalid_argument& e) {
    ctx->last_error = e.what();
    return classify(e);
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return SPX_INTERNAL;
  }
}

spx::SearchBudget budget_from(const json& req) {
  spx::SearchBudget b;
  if (req.contains("max_nodes")) b.max_nodes = req["max_nodes"].get<std::uint64_t>();
  if (req.contains("workers")) b.workers = req["workers"].get<int>();
  return b;
}

}  // namespace

extern "C" {

spx_context* spx_context_create(void) { return new (std::nothrow) spx_context; }

void spx_context_destroy(spx_context* ctx) { delete ctx; }

const char* spx_context_last_error(const spx_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "";
}

void spx_buffer_free(char* buf) { std::free(buf); }

int spx_construct(spx_context* ctx, const char* request, char** out) {
  return guarded(ctx, request, out, [&](const json& req) {
    const auto name = req.at("name").get<std::string>();
    const int k = req.at("k").get<int>();
    if (name == "tuza_tau_k") {
      emit(out, spx::to_json(spx::tuza_tau_k_family(k)));
    } else if (name == "erdos_lovasz") {
      emit(out, spx::to_json(spx::erdos_lovasz_pairs(k)));
    } else if (name == "colex_skew") {
      emit(out, spx::to_json(spx::colex_skew_system(k, req.at("l").get<int>())));
    } else if (name == "weakly_triples") {
      emit(out, spx::to_json(spx::weakly_triple_system(k, req.at("l").get<int>())));
    } else if (name == "ekr_star") {
      emit(out, spx::to_json(spx::ekr_star(req.at("n").get<int>(), k,
                                           req.value("e", 1))));
    } else {
      ctx->last_error = "unknown construction: " + name;
      return SPX_USAGE;
    }
    return SPX_OK;
  });
}

int spx_verify(spx_context* ctx, const char* request, char** out) {
  return guarded(ctx, request, out, [&](const json& req) {
    const auto sys = spx::system_from_json(req.at("system"));
    spx::PairFlavor flavor = sys.flavor_claim;
    if (req.contains("flavor")) {
      const auto f = spx::flavor_from_name(req["flavor"].get<std::string>());
      if (!f) {
        ctx->last_error = "unknown flavor";
        return SPX_USAGE;
      }
      flavor = *f;
    }
    const auto verdict = spx::verify_flavor(sys, flavor);
    json j = spx::to_json(verdict);
    j["flavor"] = spx::flavor_name(flavor);
    j["pairs"] = sys.size();
    j["vertex_count"] = spx::vertex_set(sys).size();
    if (verdict.ok)
      j["weight"] = spx::to_string(spx::bollobas_weight(sys));
    emit(out, j);
    if (!verdict.ok) {
      ctx->last_error = verdict.reason;
      return SPX_VERIFY;
    }
    return SPX_OK;
  });
}

int spx_bounds(spx_context* ctx, const char* request, char** out) {
  return guarded(ctx, request, out, [&](const json& req) {
    const int k = req.at("k").get<int>();
    std::optional<int> l, g;
    std::optional<long long> n;
    if (req.contains("l")) l = req["l"].get<int>();
    if (req.contains("n")) n = req["n"].get<long long>();
    if (req.contains("g")) g = req["g"].get<int>();
    json arr = json::array();
    for (const auto& r : spx::all_bounds(k, l, n, g)) arr.push_back(spx::to_json(r));
    emit(out, arr);
    return SPX_OK;
  });
}

int spx_family_op(spx_context* ctx, const char* request, char** out) {
  return guarded(ctx, request, out, [&](const json& req) {
    const auto op = req.at("op").get<std::string>();
    if (op == "catalog") {
      json arr = json::array();
      spx::catalog_maximal_families(req.at("n").get<int>(), req.at("k").get<int>(),
                                    [&](const spx::SetFamily& f) {
                                      arr.push_back(spx::to_json(f));
                                    });
      emit(out, arr);
      return SPX_OK;
    }
    const auto fam = spx::family_from_json(req.at("family"));
    if (!fam.k) {
      ctx->last_error = "family must be uniform (carry k)";
      return SPX_USAGE;
    }
    if (op == "closure") {
      emit(out, spx::to_json(spx::closure_I(fam, fam.n, *fam.k)));
    } else if (op == "is_maximal") {
      json j;
      j["intersecting"] = spx::is_intersecting(fam);
      j["maximal"] = spx::is_maximal_intersecting(fam, fam.n, *fam.k);
      emit(out, j);
    } else if (op == "covering_number") {
      const auto t = spx::covering_number(fam);
      emit(out, json{{"tau", t.size}, {"witness", spx::to_json(t.witness)}});
    } else if (op == "generator") {
      const auto gw = spx::minimal_generator(fam, fam.n, *fam.k);
      json j = spx::to_json(gw);
      j["pair_system"] = spx::to_json(spx::witness_pair_system(gw, *fam.k));
      j["doubled_skew"] = spx::to_json(spx::doubled_skew_system(gw, *fam.k));
      emit(out, j);
    } else {
      ctx->last_error = "unknown family op: " + op;
      return SPX_USAGE;
    }
    return SPX_OK;
  });
}

int spx_system_op(spx_context* ctx, const char* request, char** out) {
  return guarded(ctx, request, out, [&](const json& req) {
    const auto op = req.at("op").get<std::string>();
    const auto sys = spx::system_from_json(req.at("system"));
    if (op == "alpha_beta") {
      emit(out, spx::to_json(spx::alpha_beta_profile(sys)));
    } else if (op == "peel") {
      emit(out, spx::to_json(spx::peel_decomposition(sys)));
    } else if (op == "weight") {
      emit(out, json{{"weight", spx::to_string(spx::bollobas_weight(sys))}});
    } else if (op == "vertex_set") {
      const auto v = spx::vertex_set(sys);
      emit(out, json{{"vertex_set", spx::to_json(v)}, {"count", v.size()}});
    } else {
      ctx->last_error = "unknown system op: " + op;
      return SPX_USAGE;
    }
    return SPX_OK;
  });
}

int spx_search(spx_context* ctx, const char* request, char** out) {
  return guarded(ctx, request, out, [&](const json& req) {
    const auto qname = req.at("quantity").get<std::string>();
    const auto q = spx::quantity_from_name(qname);
    if (!q) {
      ctx->last_error = "unknown quantity: " + qname;
      return SPX_USAGE;
    }
    const auto budget = budget_from(req);
    bool warm = false;
    if (req.contains("warm_start")) {
      // accepted for pipeline compatibility; searches seed themselves from
      // the same constructions internally, so the input is validated only
      const auto& w = req["warm_start"];
      if (w.contains("pairs"))
        spx::system_from_json(w);
      else
        spx::family_from_json(w);
      warm = true;
    }
    spx::SearchResult r;
    switch (*q) {
      case spx::Quantity::M:
        r = spx::count_maximal_intersecting(req.at("n").get<int>(),
                                            req.at("k").get<int>(), budget);
        break;
      case spx::Quantity::F:
        r = spx::search_f(req.at("k").get<int>(), budget);
        break;
      case spx::Quantity::G:
        r = spx::search_g(req.at("k").get<int>(), budget);
        break;
      case spx::Quantity::NCross:
        r = spx::search_vertex_max(req.at("k").get<int>(), req.at("l").get<int>(),
                                   spx::PairFlavor::Cross, budget);
        break;
      case spx::Quantity::NSkew:
        r = spx::search_vertex_max(req.at("k").get<int>(), req.at("l").get<int>(),
                                   spx::PairFlavor::Skew, budget);
        break;
      case spx::Quantity::NWeakly:
        r = spx::search_vertex_max(req.at("k").get<int>(), req.at("l").get<int>(),
                                   spx::PairFlavor::Weakly, budget);
        break;
    }
    if (warm)
      r.notes.push_back("warm-start input accepted; search seeds itself internally");
    emit(out, spx::to_json(r));
    return SPX_OK;
  });
}

int spx_reproduce(spx_context* ctx, const char* request, char** out) {
  return guarded(ctx, request ? request : "{}", out, [&](const json& req) {
    const auto only = req.value("only", std::string());
    json arr = json::array();
    bool all_pass = true;
    for (const auto& c : spx::run_acceptance(only)) {
      arr.push_back(json{{"id", c.id},
                         {"name", c.name},
                         {"pass", c.pass},
                         {"detail", c.detail},
                         {"wall_ms", c.wall_ms}});
      all_pass = all_pass && c.pass;
    }
    emit(out, arr);
    if (!all_pass) {
      ctx->last_error = "one or more criteria failed";
      return SPX_VERIFY;
    }
    return SPX_OK;
  });
}

}  // extern "C"
