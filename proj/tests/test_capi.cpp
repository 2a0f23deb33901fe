#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <json.hpp>

#include "spx/setpair.h"

using nlohmann::json;

namespace {

struct Ctx {
  spx_context* ctx = spx_context_create();
  ~Ctx() { spx_context_destroy(ctx); }
};

// runs a call, frees the buffer, returns {code, parsed payload}
template <typename Fn>
std::pair<int, json> call(Fn&& fn) {
  char* out = nullptr;
  const int rc = fn(&out);
  json payload;
  if (out) {
    payload = json::parse(std::string(out));
    spx_buffer_free(out);
  }
  return {rc, payload};
}

}  // namespace

TEST_CASE("construct and verify a pipeline") {
  Ctx c;
  auto [rc1, sys] = call([&](char** out) {
    return spx_construct(c.ctx, R"({"name":"colex_skew","k":2,"l":2})", out);
  });
  REQUIRE(rc1 == SPX_OK);
  CHECK(sys["pairs"].size() == 6);
  CHECK(sys["flavor"] == "skew");

  json verify_req{{"system", sys}};
  auto [rc2, verdict] = call([&](char** out) {
    return spx_verify(c.ctx, verify_req.dump().c_str(), out);
  });
  CHECK(rc2 == SPX_OK);
  CHECK(verdict["ok"] == true);
  CHECK(verdict["weight"] == "1");
  CHECK(verdict["vertex_count"] == 8);
}

TEST_CASE("verification failure returns SPX_VERIFY with a verdict") {
  Ctx c;
  const char* req =
      R"({"system":{"k":1,"l":1,"flavor":"cross",
          "pairs":[{"A":[1],"B":[2]},{"A":[3],"B":[4]}]}})";
  auto [rc, verdict] = call([&](char** out) { return spx_verify(c.ctx, req, out); });
  CHECK(rc == SPX_VERIFY);
  CHECK(verdict["ok"] == false);
  CHECK(std::string(spx_context_last_error(c.ctx)).size() > 0);
}

TEST_CASE("usage errors") {
  Ctx c;
  CHECK(spx_construct(c.ctx, "not json", nullptr) == SPX_USAGE);
  CHECK(spx_construct(c.ctx, R"({"name":"bogus","k":2})", nullptr) == SPX_USAGE);
  CHECK(spx_construct(c.ctx, nullptr, nullptr) == SPX_USAGE);
  CHECK(std::string(spx_context_last_error(c.ctx)) == "null request");
  // caps violated inside the payload
  const char* bad =
      R"({"system":{"k":1,"l":1,"flavor":"cross","pairs":[{"A":[1,2],"B":[3]}]}})";
  CHECK(spx_verify(c.ctx, bad, nullptr) == SPX_USAGE);
}

TEST_CASE("budget refusals map to SPX_BUDGET") {
  Ctx c;
  auto [rc, payload] = call([&](char** out) {
    return spx_search(c.ctx, R"({"quantity":"M","n":30,"k":4})", out);
  });
  CHECK(rc == SPX_BUDGET);
  CHECK(payload.is_null());
}

TEST_CASE("bounds over the wire") {
  Ctx c;
  auto [rc, arr] = call([&](char** out) {
    return spx_bounds(c.ctx, R"({"k":2,"l":2})", out);
  });
  REQUIRE(rc == SPX_OK);
  bool saw = false;
  for (const auto& r : arr)
    if (r["name"] == "n1_upper") {
      saw = true;
      CHECK(r["value"] == "12");
      CHECK(r["kind"] == "exact");
    }
  CHECK(saw);
}

TEST_CASE("family ops over the wire") {
  Ctx c;
  const json fam{{"n", 3}, {"k", 2}, {"sets", {{1, 2}, {1, 3}, {2, 3}}}};

  auto [rc1, maximal] = call([&](char** out) {
    json req{{"op", "is_maximal"}, {"family", fam}};
    return spx_family_op(c.ctx, req.dump().c_str(), out);
  });
  CHECK(rc1 == SPX_OK);
  CHECK(maximal["maximal"] == true);

  auto [rc2, tau] = call([&](char** out) {
    json req{{"op", "covering_number"}, {"family", fam}};
    return spx_family_op(c.ctx, req.dump().c_str(), out);
  });
  CHECK(rc2 == SPX_OK);
  CHECK(tau["tau"] == 2);

  auto [rc3, gen] = call([&](char** out) {
    json req{{"op", "generator"}, {"family", fam}};
    return spx_family_op(c.ctx, req.dump().c_str(), out);
  });
  CHECK(rc3 == SPX_OK);
  CHECK(gen.contains("generator"));
  CHECK(gen.contains("pair_system"));

  auto [rc4, cat] = call([&](char** out) {
    return spx_family_op(c.ctx, R"({"op":"catalog","n":5,"k":2})", out);
  });
  CHECK(rc4 == SPX_OK);
  CHECK(cat.size() == 15);
}

TEST_CASE("system ops over the wire") {
  Ctx c;
  auto [rc0, sys] = call([&](char** out) {
    return spx_construct(c.ctx, R"({"name":"colex_skew","k":2,"l":2})", out);
  });
  REQUIRE(rc0 == SPX_OK);
  json req{{"op", "peel"}, {"system", sys}};
  auto [rc, trace] = call([&](char** out) {
    return spx_system_op(c.ctx, req.dump().c_str(), out);
  });
  REQUIRE(rc == SPX_OK);
  CHECK(trace["vertex_count"] == 8);
  CHECK(trace["levels"].size() == 3);
}

TEST_CASE("search over the wire with exact decimal values") {
  Ctx c;
  auto [rc, r] = call([&](char** out) {
    return spx_search(c.ctx, R"({"quantity":"M","n":5,"k":2})", out);
  });
  REQUIRE(rc == SPX_OK);
  CHECK(r["value"] == "15");
  CHECK(r["proven_optimal"] == true);

  auto [rc2, r2] = call([&](char** out) {
    return spx_search(c.ctx,
                      R"({"quantity":"n","k":2,"l":2,"workers":2})", out);
  });
  REQUIRE(rc2 == SPX_OK);
  CHECK(r2["value"] == "6");
  CHECK(r2["witness"].contains("pairs"));
}

TEST_CASE("reproduce subset over the wire") {
  Ctx c;
  auto [rc, arr] = call([&](char** out) {
    return spx_reproduce(c.ctx, R"({"only":"bounds"})", out);
  });
  CHECK(rc == SPX_OK);
  REQUIRE(arr.size() == 1);
  CHECK(arr[0]["pass"] == true);
  CHECK(arr[0]["name"] == "bounds ledger");
}
