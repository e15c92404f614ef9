/*
   Copyright 2026 The mahler-gauge authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/* Exercises the shared library strictly through the C boundary; the
 * JSON strings coming back are inspected with an independent parser. */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>

#include <nlohmann/json.hpp>

#include "mahlergauge.h"

using nlohmann::json;

namespace {

/* Takes ownership of a C string from the library. */
std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  mg_string_free(s);
  return out;
}

json take_json(char* s) { return json::parse(take(s)); }

struct PolyGuard {
  mg_poly* p = nullptr;
  explicit PolyGuard(const char* text) {
    REQUIRE(mg_poly_parse(text, &p) == MG_OK);
  }
  ~PolyGuard() { mg_poly_free(p); }
};

struct FieldGuard {
  mg_field* k = nullptr;
  explicit FieldGuard(const char* spec) {
    REQUIRE(mg_field_from_spec(spec, &k) == MG_OK);
  }
  ~FieldGuard() { mg_field_free(k); }
};

}  // namespace

TEST_CASE("version and defaults") {
  CHECK(std::strcmp(mg_version(), "0.1.0") == 0);
  CHECK(mg_default_precision() == 128);
  CHECK(std::strcmp(mg_last_error(), "") == 0);
  mg_string_free(nullptr);  // must be a no-op
}

TEST_CASE("polynomial lifecycle") {
  PolyGuard g("x^3 - 2x + 1");
  CHECK(mg_poly_degree(g.p) == 3);
  char* text = nullptr;
  REQUIRE(mg_poly_to_text(g.p, &text) == MG_OK);
  CHECK(take(text) == "x^3-2x+1");
  CHECK(mg_poly_degree(nullptr) == -1);
}

TEST_CASE("parse failures carry a message") {
  mg_poly* p = nullptr;
  CHECK(mg_poly_parse("x^^2", &p) == MG_ERR_PARSE);
  CHECK(std::string(mg_last_error()).find("exponent") != std::string::npos);
  CHECK(mg_poly_parse(nullptr, &p) == MG_ERR_DOMAIN);
  PolyGuard g("x^2+1");
  char* out = nullptr;
  CHECK(mg_poly_to_text(g.p, nullptr) == MG_ERR_DOMAIN);
  CHECK(mg_poly_to_text(nullptr, &out) == MG_ERR_DOMAIN);
}

TEST_CASE("measure JSON for an exact input") {
  PolyGuard g("3x^2-2");
  char* out = nullptr;
  REQUIRE(mg_measure(g.p, 0, &out) == MG_OK);
  json j = take_json(out);
  CHECK(j["poly"] == "3x^2-2");
  REQUIRE(j["value"]["exact"].is_string());
  CHECK(j["value"]["exact"] == "3");
  CHECK(j["value_approx"].get<double>() == doctest::Approx(3.0));
  CHECK(j["l1_lower"] == "5/4");
  CHECK(j["l1_upper"] == "5");
  CHECK(j["precision_bits"] == 128);
  REQUIRE(j["roots"].is_array());
  CHECK(j["roots"].size() == 2);
  for (const auto& r : j["roots"]) {
    CHECK(r["real"] == true);
    CHECK(r["multiplicity"] == 1);
  }
}

TEST_CASE("measure JSON for an irrational measure") {
  PolyGuard g("x^2-x-1");
  char* out = nullptr;
  REQUIRE(mg_measure(g.p, 256, &out) == MG_OK);
  json j = take_json(out);
  CHECK(j["value"]["exact"].is_null());
  CHECK(j["value_approx"].get<double>() ==
        doctest::Approx(1.6180339887).epsilon(1e-9));
  CHECK(j["precision_bits"] == 256);
}

TEST_CASE("invalid precision is a domain error") {
  PolyGuard g("x^2+1");
  char* out = nullptr;
  CHECK(mg_measure(g.p, 4, &out) == MG_ERR_DOMAIN);
  CHECK(mg_measure(g.p, 100000, &out) == MG_ERR_DOMAIN);
}

TEST_CASE("checks over the four subjects") {
  PolyGuard g("x^2+4");
  int holds = 0;
  char* out = nullptr;

  REQUIRE(mg_check(g.p, "mahler", nullptr, 0, &out, &holds) == MG_OK);
  json j = take_json(out);
  CHECK(holds == 1);
  REQUIRE(j.is_array());
  CHECK(j.size() == 1);
  CHECK(j[0]["holds"] == true);

  REQUIRE(mg_check(g.p, "paired", "1", 0, &out, &holds) == MG_OK);
  j = take_json(out);
  CHECK(holds == 1);
  CHECK(j[0]["lhs"]["exact"] == "4");
  CHECK(j[0]["rhs"]["exact"] == "4");
  CHECK(j[0]["slack"]["exact"] == "0");

  REQUIRE(mg_check(g.p, "l1", nullptr, 0, &out, &holds) == MG_OK);
  j = take_json(out);
  CHECK(holds == 1);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["name"] == "l1-lower");
  CHECK(j[1]["name"] == "l1-upper");

  REQUIRE(mg_check(g.p, "cor15", "1", 0, &out, &holds) == MG_OK);
  j = take_json(out);
  CHECK(holds == 1);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["name"] == "disc-l1");
  CHECK(j[1]["name"] == "disc-l1-mahler");

  CHECK(mg_check(g.p, "bogus", nullptr, 0, &out, &holds) == MG_ERR_DOMAIN);
  CHECK(std::string(mg_last_error()).find("cor15") != std::string::npos);
}

TEST_CASE("hypothesis violations surface as their own status") {
  PolyGuard g("x^2-x-1");
  char* out = nullptr;
  int holds = 0;
  CHECK(mg_check(g.p, "paired", "1", 0, &out, &holds) == MG_ERR_HYPOTHESIS);
  CHECK(std::string(mg_last_error()).find("partner") != std::string::npos);
}

TEST_CASE("energy check round-trip") {
  const char* cfg = R"({"k":3,"points":[[1,0,0],[-1,0,0]]})";
  char* out = nullptr;
  int holds = 0;
  REQUIRE(mg_energy_check(cfg, "1", 0, &out, &holds) == MG_OK);
  json j = take_json(out);
  CHECK(holds == 1);
  CHECK(j["report"]["holds"] == true);
  CHECK(j["report"]["slack"]["exact"] == "0");
  CHECK(j["trivial_zero"] == false);
  CHECK(j["pairing"]["r"] == "1");
  CHECK(j["pairing"]["small_indices"].size() == 2);
  CHECK(j["trace"].is_object());

  CHECK(mg_energy_check("{\"k\":2}", nullptr, 0, &out, &holds) == MG_ERR_PARSE);
  const char* lone = R"({"k":3,"points":[[2,0,0],[0,0,1]]})";
  CHECK(mg_energy_check(lone, "1", 0, &out, &holds) == MG_ERR_HYPOTHESIS);
}

TEST_CASE("field spec, info, and bound checks") {
  FieldGuard f(R"({"poly":"x^2+2","disc":-8,"name":"q8"})");
  char* out = nullptr;
  REQUIRE(mg_field_info(f.k, &out) == MG_OK);
  json j = take_json(out);
  CHECK(j["poly"] == "x^2+2");
  CHECK(j["degree"] == 2);
  CHECK(j["real_embeddings"] == 0);
  CHECK(j["conjugate_pairs"] == 1);
  CHECK(j["disc"] == "-8");
  CHECK(j["field_disc"] == "-8");
  CHECK(j["power_basis"] == true);

  int holds = 0;
  REQUIRE(mg_field_check_bounds(f.k, "2", 0, &out, &holds) == MG_OK);
  j = take_json(out);
  CHECK(holds == 1);
  REQUIRE(j.size() == 4);
  CHECK(j[0]["name"] == "field-mahler");
  CHECK(j[2]["name"] == "field-imquad");
  CHECK(j[2]["slack"]["exact"] == "0");  // M = |disc|/4 exactly here

  mg_field* bad = nullptr;
  CHECK(mg_field_from_spec("{\"poly\":\"x^2-1\"}", &bad) == MG_ERR_DOMAIN);
  CHECK(mg_field_from_spec("{", &bad) == MG_ERR_PARSE);
  CHECK(mg_field_from_spec(R"({"poly":"x^2+1","junk":0})", &bad) == MG_ERR_PARSE);
}

TEST_CASE("generator search through the C boundary") {
  FieldGuard f(R"({"poly":"x^2+1","disc":-4})");
  char* out = nullptr;
  REQUIRE(mg_field_search_generators(f.k, "10", "2", 0, &out) == MG_OK);
  json j = take_json(out);
  CHECK(j["c"] == "2");
  REQUIRE(j["records"].size() == 1);
  const auto& rec = j["records"][0];
  CHECK(rec["minpoly"] == "x^2-22x+410");
  CHECK(rec["M"]["exact"] == "410");
  CHECK(rec["index"] == "17");

  CHECK(mg_field_search_generators(f.k, "", "2", 0, &out) == MG_ERR_DOMAIN);
  CHECK(mg_field_search_generators(f.k, "10,5", "", 0, &out) == MG_ERR_DOMAIN);

  FieldGuard real(R"({"poly":"x^2-2","disc":8})");
  CHECK(mg_field_search_generators(real.k, "10", "", 0, &out) ==
        MG_ERR_HYPOTHESIS);
  REQUIRE(mg_field_search_generators(real.k, "10", "", 1, &out) == MG_OK);
  j = take_json(out);
  CHECK(j["records"].size() == 1);
}

TEST_CASE("minimum measure through the C boundary") {
  FieldGuard f(R"({"poly":"x^2+1","disc":-4})");
  char* out = nullptr;
  REQUIRE(mg_field_min_measure(f.k, "2", &out) == MG_OK);
  json j = take_json(out);
  CHECK(j["found"] == true);
  CHECK(j["M"]["exact"] == "1");
  CHECK(mg_field_min_measure(f.k, "abc", &out) == MG_ERR_PARSE);
  CHECK(mg_field_min_measure(nullptr, "2", &out) == MG_ERR_DOMAIN);
}

TEST_CASE("reproduction suite determinism at the C boundary") {
  char* json1 = nullptr;
  char* csv1 = nullptr;
  char* json2 = nullptr;
  char* csv2 = nullptr;
  int holds1 = 0, holds2 = 0;
  REQUIRE(mg_repro("identities", 1, 0, &json1, &csv1, &holds1) == MG_OK);
  REQUIRE(mg_repro("identities", 1, 0, &json2, &csv2, &holds2) == MG_OK);
  std::string a = take(json1), b = take(json2);
  std::string ca = take(csv1), cb = take(csv2);
  CHECK(holds1 == 1);
  CHECK(holds2 == 1);
  CHECK(a == b);
  CHECK(ca == cb);
  CHECK(ca.rfind("suite, check, lhs, rhs, holds, slack", 0) == 0);
  json j = json::parse(a);
  CHECK(j["seed"] == 1);
  CHECK(j["suites"].size() == 1);
  CHECK(j["suites"][0]["suite"] == "identities");

  char* out = nullptr;
  CHECK(mg_repro("nonsense", 1, 0, &out, nullptr, nullptr) == MG_ERR_DOMAIN);
}
