// spx: command-line front end for the set-pair toolkit. All heavy lifting
// happens behind the C API in libsetpair; this file only shuffles JSON.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "spx/setpair.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

int exit_code_for(int spx_code) {
  switch (spx_code) {
    case SPX_OK: return kExitOk;
    case SPX_VERIFY: return kExitVerify;
    case SPX_USAGE: return kExitUsage;
    case SPX_BUDGET: return kExitBudget;
    default: return kExitInternal;
  }
}

struct Api {
  spx_context* ctx = spx_context_create();
  ~Api() { spx_context_destroy(ctx); }

  // Runs fn, reports errors on stderr, returns {exit code, payload}.
  template <typename Fn>
  std::pair<int, json> call(Fn&& fn) {
    char* out = nullptr;
    const int rc = fn(ctx, &out);
    json payload;
    if (out) {
      payload = json::parse(out, nullptr, /*allow_exceptions=*/false);
      spx_buffer_free(out);
    }
    if (rc != SPX_OK) std::cerr << "spx: " << spx_context_last_error(ctx) << "\n";
    return {exit_code_for(rc), payload};
  }
};

std::string read_input(const std::string& in_path) {
  if (!in_path.empty()) {
    std::ifstream f(in_path);
    if (!f) throw CLI::ValidationError("--in", "cannot open " + in_path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }
  std::ostringstream ss;
  ss << std::cin.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(out_path);
  f << text << "\n";
}

std::uint64_t default_budget_nodes() {
  if (const char* env = std::getenv("SETPAIR_BUDGET_NODES"))
    return std::strtoull(env, nullptr, 10);
  return 50'000'000ull;
}

void render_bounds_table(const json& arr, std::ostream& os, bool refs) {
  std::size_t name_w = 4, val_w = 5;
  for (const auto& r : arr) {
    name_w = std::max(name_w, r["name"].get<std::string>().size());
    const std::string v = r["kind"] == "log2"
                              ? json(r["value"]).dump()
                              : r["value"].get<std::string>();
    val_w = std::max(val_w, v.size());
  }
  for (const auto& r : arr) {
    const std::string v = r["kind"] == "log2"
                              ? json(r["value"]).dump()
                              : r["value"].get<std::string>();
    os << r["name"].get<std::string>()
       << std::string(name_w - r["name"].get<std::string>().size() + 2, ' ')
       << r["kind"].get<std::string>() << (r["kind"] == "rational" ? " " : "    ")
       << v << std::string(val_w - v.size() + 2, ' ');
    if (refs && r.contains("anchor")) os << r["anchor"].get<std::string>();
    if (r.contains("flags"))
      for (const auto& f : r["flags"]) os << " [" << f.get<std::string>() << "]";
    os << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"set-pair systems and intersecting families toolkit"};
  app.require_subcommand(1);

  std::string in_path, out_path;
  app.add_option("--in", in_path, "read input JSON from a file instead of stdin")
      ->capture_default_str();
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  // construct
  auto* construct = app.add_subcommand("construct", "emit a named construction");
  std::string c_name;
  int c_k = 0, c_l = 0, c_n = 0, c_e = 1;
  construct->add_option("--name", c_name, "tuza | erdos-lovasz | colex-skew | weakly-triple | ekr-star")
      ->required();
  construct->add_option("--k", c_k)->required();
  construct->add_option("--l", c_l);
  construct->add_option("--n", c_n);
  construct->add_option("--e", c_e, "fixed element for ekr-star");

  // verify
  auto* verify = app.add_subcommand("verify", "check a pair system against a flavor");
  std::string v_flavor;
  verify->add_option("--flavor", v_flavor, "cross | skew | weakly (default: the system's claim)");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "evaluate every applicable closed-form bound");
  int b_k = 0;
  std::optional<int> b_l, b_g;
  std::optional<long long> b_n;
  bool b_table = false, b_refs = false;
  bounds->add_option("--k", b_k)->required();
  bounds->add_option("--l", b_l);
  bounds->add_option("--n", b_n);
  bounds->add_option("--g", b_g);
  bounds->add_flag("--table", b_table, "aligned text instead of JSON");
  bounds->add_flag("--paper-refs", b_refs, "annotate each value with its source formula");

  // family
  auto* family = app.add_subcommand("family", "operate on a uniform set family");
  std::string f_op;
  family->add_option("--op", f_op, "closure | maximal | tau | generator")->required();

  // system
  auto* system = app.add_subcommand("system", "analyze a pair system");
  std::string s_op;
  system->add_option("--op", s_op, "alpha-beta | peel | weight | vertex-set")->required();

  // search
  auto* search = app.add_subcommand("search", "exact extremal search");
  std::string q_name, emit_witness, catalog_path, warm_start;
  int q_k = 0, q_workers = 1;
  std::optional<int> q_l;
  std::optional<long long> q_n;
  std::uint64_t q_budget = default_budget_nodes();
  search->add_option("--quantity", q_name, "M | f | g | n | n1 | n2")->required();
  search->add_option("--n", q_n);
  search->add_option("--k", q_k)->required();
  search->add_option("--l", q_l);
  search->add_option("--budget-nodes", q_budget, "node budget (env SETPAIR_BUDGET_NODES)");
  search->add_option("--workers", q_workers, "search worker pool size");
  search->add_option("--emit-witness", emit_witness, "write the witness JSON to a file");
  search->add_option("--catalog", catalog_path,
                     "with --quantity M: stream every maximal family as JSON-lines");
  search->add_option("--warm-start", warm_start, "seed file (validated; searches self-seed)");

  // reproduce
  auto* reproduce = app.add_subcommand("reproduce", "run the built-in verification matrix");
  std::string r_only;
  bool r_json = false;
  reproduce->add_option("--only", r_only, "run only criteria whose name contains this substring");
  reproduce->add_flag("--json", r_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  Api api;
  if (!api.ctx) return kExitInternal;

  try {
    if (*construct) {
      json req{{"k", c_k}};
      if (c_name == "tuza") req["name"] = "tuza_tau_k";
      else if (c_name == "erdos-lovasz") req["name"] = "erdos_lovasz";
      else if (c_name == "colex-skew") req["name"] = "colex_skew";
      else if (c_name == "weakly-triple") req["name"] = "weakly_triples";
      else if (c_name == "ekr-star") req["name"] = "ekr_star";
      else {
        std::cerr << "spx: unknown construction name: " << c_name << "\n";
        return kExitUsage;
      }
      if (c_l) req["l"] = c_l;
      if (c_n) req["n"] = c_n;
      if (c_name == "ekr-star") req["e"] = c_e;
      auto [rc, payload] = api.call([&](spx_context* ctx, char** out) {
        return spx_construct(ctx, req.dump().c_str(), out);
      });
      if (rc == kExitOk) write_output(out_path, payload.dump());
      return rc;
    }

    if (*verify) {
      json req{{"system", json::parse(read_input(in_path))}};
      if (!v_flavor.empty()) req["flavor"] = v_flavor;
      auto [rc, payload] = api.call([&](spx_context* ctx, char** out) {
        return spx_verify(ctx, req.dump().c_str(), out);
      });
      if (!payload.is_null()) write_output(out_path, payload.dump());
      return rc;
    }

    if (*bounds) {
      json req{{"k", b_k}};
      if (b_l) req["l"] = *b_l;
      if (b_n) req["n"] = *b_n;
      if (b_g) req["g"] = *b_g;
      auto [rc, payload] = api.call([&](spx_context* ctx, char** out) {
        return spx_bounds(ctx, req.dump().c_str(), out);
      });
      if (rc != kExitOk) return rc;
      if (!b_refs)
        for (auto& r : payload) r.erase("anchor");
      if (b_table) {
        std::ostringstream ss;
        render_bounds_table(payload, ss, b_refs);
        std::string text = ss.str();
        if (!text.empty() && text.back() == '\n') text.pop_back();
        write_output(out_path, text);
      } else {
        write_output(out_path, payload.dump());
      }
      return rc;
    }

    if (*family) {
      static const std::map<std::string, std::string> ops = {
          {"closure", "closure"},
          {"maximal", "is_maximal"},
          {"tau", "covering_number"},
          {"generator", "generator"}};
      const auto it = ops.find(f_op);
      if (it == ops.end()) {
        std::cerr << "spx: unknown family op: " << f_op << "\n";
        return kExitUsage;
      }
      json req{{"op", it->second}, {"family", json::parse(read_input(in_path))}};
      auto [rc, payload] = api.call([&](spx_context* ctx, char** out) {
        return spx_family_op(ctx, req.dump().c_str(), out);
      });
      if (rc == kExitOk) write_output(out_path, payload.dump());
      return rc;
    }

    if (*system) {
      static const std::map<std::string, std::string> ops = {
          {"alpha-beta", "alpha_beta"},
          {"peel", "peel"},
          {"weight", "weight"},
          {"vertex-set", "vertex_set"}};
      const auto it = ops.find(s_op);
      if (it == ops.end()) {
        std::cerr << "spx: unknown system op: " << s_op << "\n";
        return kExitUsage;
      }
      json req{{"op", it->second}, {"system", json::parse(read_input(in_path))}};
      auto [rc, payload] = api.call([&](spx_context* ctx, char** out) {
        return spx_system_op(ctx, req.dump().c_str(), out);
      });
      if (rc == kExitOk) write_output(out_path, payload.dump());
      return rc;
    }

    if (*search) {
      if (!catalog_path.empty()) {
        if (q_name != "M" || !q_n) {
          std::cerr << "spx: --catalog requires --quantity M with --n and --k\n";
          return kExitUsage;
        }
        json req{{"op", "catalog"}, {"n", *q_n}, {"k", q_k}};
        auto [rc, payload] = api.call([&](spx_context* ctx, char** out) {
          return spx_family_op(ctx, req.dump().c_str(), out);
        });
        if (rc != kExitOk) return rc;
        std::ofstream f(catalog_path);
        for (const auto& fam : payload) f << fam.dump() << "\n";
        std::cout << payload.size() << " families written to " << catalog_path << "\n";
        return rc;
      }
      json req{{"quantity", q_name},
               {"k", q_k},
               {"max_nodes", q_budget},
               {"workers", q_workers}};
      if (q_n) req["n"] = *q_n;
      if (q_l) req["l"] = *q_l;
      if (!warm_start.empty()) req["warm_start"] = json::parse(read_input(warm_start));
      auto [rc, payload] = api.call([&](spx_context* ctx, char** out) {
        return spx_search(ctx, req.dump().c_str(), out);
      });
      if (rc != kExitOk) return rc;
      if (!emit_witness.empty() && payload.contains("witness")) {
        std::ofstream f(emit_witness);
        f << payload["witness"].dump() << "\n";
      }
      write_output(out_path, payload.dump());
      // partial result already emitted; signal an exhausted node budget
      if (payload.contains("notes"))
        for (const auto& note : payload["notes"])
          if (note.get<std::string>().find("budget exhausted") != std::string::npos)
            return kExitBudget;
      return rc;
    }

    if (*reproduce) {
      json req;
      if (!r_only.empty()) req["only"] = r_only;
      auto [rc, payload] = api.call([&](spx_context* ctx, char** out) {
        return spx_reproduce(ctx, req.empty() ? "{}" : req.dump().c_str(), out);
      });
      if (payload.is_null()) return rc;
      if (r_json) {
        write_output(out_path, payload.dump());
      } else {
        std::ostringstream ss;
        for (const auto& c : payload) {
          char line[128];
          std::snprintf(line, sizeof line, "[%s] %d. %-34s %9.1f ms",
                        c["pass"].get<bool>() ? "PASS" : "FAIL", c["id"].get<int>(),
                        (c["name"].get<std::string>()).c_str(),
                        c["wall_ms"].get<double>());
          ss << line;
          const auto detail = c["detail"].get<std::string>();
          if (!c["pass"].get<bool>() && !detail.empty()) ss << "  -- " << detail;
          ss << "\n";
        }
        std::string text = ss.str();
        if (!text.empty() && text.back() == '\n') text.pop_back();
        write_output(out_path, text);
      }
      return rc;
    }
  } catch (const json::exception& e) {
    std::cerr << "spx: bad input JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "spx: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
