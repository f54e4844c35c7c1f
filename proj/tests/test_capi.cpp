// Copyright 2026 The hodge-bounds Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include <json.hpp>

#include "hodge_bounds/hodge_bounds.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  hb_string_free(s);
  return out;
}

struct Profile {
  hb_profile* p = nullptr;
  ~Profile() { hb_profile_free(p); }
};
struct Cat {
  hb_catalog* c = nullptr;
  ~Cat() { hb_catalog_free(c); }
};
struct Dm {
  hb_diamond* d = nullptr;
  ~Dm() { hb_diamond_free(d); }
};

hb_catalog* make_catalog(int d, int q, const char* m, bool second_order = false) {
  Profile pf;
  REQUIRE(hb_profile_new(d, q, m, &pf.p) == HB_OK);
  hb_catalog_options o;
  hb_catalog_options_default(&o);
  o.second_order = second_order ? 1 : 0;
  hb_catalog* c = nullptr;
  REQUIRE(hb_catalog_generate(pf.p, &o, &c) == HB_OK);
  return c;
}

}  // namespace

TEST_CASE("status names and errors") {
  CHECK(std::strlen(hb_version()) > 0);
  CHECK(std::string(hb_status_name(HB_OK)) == "ok");
  CHECK(std::string(hb_status_name(HB_ERR_SYMMETRY)) == "symmetry violation");
  hb_profile* p = nullptr;
  CHECK(hb_profile_new(3, 2, "4", &p) == HB_ERR_INVALID_ARGUMENT);
  CHECK(p == nullptr);
  CHECK(std::string(hb_last_error()).size() > 0);
  CHECK(hb_profile_new(3, 2, "0", &p) == HB_ERR_INVALID_ARGUMENT);
  CHECK(hb_profile_new(3, 2, "inf", nullptr) == HB_ERR_INVALID_ARGUMENT);
  CHECK(hb_profile_new(3, 2, "inf", &p) == HB_OK);
  CHECK(std::string(hb_last_error()).empty());
  CHECK(hb_profile_set_albanese(p, 2, 1) == HB_ERR_INVALID_ARGUMENT);
  CHECK(hb_profile_set_albanese(p, 1, 2) == HB_OK);
  hb_profile_free(p);
  hb_profile_free(nullptr);
  hb_catalog_free(nullptr);
  hb_diamond_free(nullptr);
  hb_string_free(nullptr);
}

TEST_CASE("catalog round trip through JSON") {
  Cat a;
  a.c = make_catalog(3, 5, "3");
  CHECK(hb_catalog_size(a.c) > 10);
  char* text = nullptr;
  REQUIRE(hb_catalog_render(a.c, HB_FORMAT_JSON, &text) == HB_OK);
  std::string json = take(text);
  Cat b;
  REQUIRE(hb_catalog_parse_json(json.c_str(), &b.c) == HB_OK);
  CHECK(hb_catalog_size(b.c) == hb_catalog_size(a.c));
  REQUIRE(hb_catalog_render(b.c, HB_FORMAT_JSON, &text) == HB_OK);
  CHECK(take(text) == json);
  CHECK(hb_catalog_render(a.c, HB_FORMAT_TSV, &text) == HB_ERR_INVALID_ARGUMENT);
  Cat bad;
  CHECK(hb_catalog_parse_json("{", &bad.c) == HB_ERR_PARSE);
  CHECK(bad.c == nullptr);
}

TEST_CASE("diamonds") {
  Dm ab;
  REQUIRE(hb_diamond_abelian(3, &ab.d) == HB_OK);
  CHECK(hb_diamond_dimension(ab.d) == 3);
  char* s = nullptr;
  REQUIRE(hb_diamond_entry(ab.d, 1, 2, &s) == HB_OK);
  CHECK(take(s) == "9");

  Dm part;
  REQUIRE(hb_diamond_parse_json(R"({"d":2,"h":[[1,2,null],[2,null,2],[null,2,1]]})", &part.d) == HB_OK);
  CHECK(hb_diamond_entry(part.d, 1, 1, &s) == HB_ERR_UNASSIGNED);

  Dm broken;
  REQUIRE(hb_diamond_parse_json(R"({"d":2,"h":[[1,2,1],[3,4,2],[1,2,1]]})", &broken.d) == HB_OK);
  Profile pf;
  REQUIRE(hb_profile_new(2, 2, "2", &pf.p) == HB_OK);
  char* msg = nullptr;
  CHECK(hb_diamond_validate(broken.d, pf.p, &msg) == HB_ERR_SYMMETRY);
  CHECK(take(msg).find("Hodge symmetry") != std::string::npos);
  CHECK(hb_diamond_validate(ab.d, pf.p, &msg) == HB_ERR_INVALID_ARGUMENT);
  hb_string_free(msg);
}

TEST_CASE("checking diamonds") {
  Cat cat;
  cat.c = make_catalog(3, 3, "inf");
  Dm ab;
  REQUIRE(hb_diamond_abelian(3, &ab.d) == HB_OK);
  int feasible = -1;
  char* report = nullptr;
  REQUIRE(hb_check(ab.d, cat.c, HB_FORMAT_JSON, &feasible, &report) == HB_OK);
  CHECK(feasible == 1);
  CHECK(nlohmann::json::parse(take(report))["verdict"] == "FEASIBLE");

  Cat surf;
  surf.c = make_catalog(2, 5, "2");
  Dm low;
  REQUIRE(hb_diamond_parse_json(R"({"d":2,"h":[[1,5,6],[5,30,5],[6,5,1]]})", &low.d) == HB_OK);
  REQUIRE(hb_check(low.d, surf.c, HB_FORMAT_TEXT, &feasible, &report) == HB_OK);
  CHECK(feasible == 0);
  CHECK(take(report).find("INFEASIBLE") != std::string::npos);

  Dm wrong_dim;
  REQUIRE(hb_diamond_abelian(2, &wrong_dim.d) == HB_OK);
  CHECK(hb_check(wrong_dim.d, cat.c, HB_FORMAT_JSON, &feasible, &report) != HB_OK);
}

TEST_CASE("solving and minimizing") {
  Cat cat;
  cat.c = make_catalog(3, 20, "3", true);
  char* out = nullptr;
  REQUIRE(hb_solve(cat.c, "delta[p=1].c_2", nullptr, "h11", HB_FORMAT_TEXT, &out) == HB_OK);
  CHECK(take(out) == "h11 >= 2*q - 1/2 + 1/2*sqrt(8*q + 1)\n");
  REQUIRE(hb_solve(cat.c, "delta[p=1].c_2", nullptr, nullptr, HB_FORMAT_JSON, &out) == HB_OK);
  CHECK(nlohmann::json::parse(take(out))["rad"] == "8*q + 1");
  REQUIRE(hb_solve(cat.c, nullptr, "h12^2 - 4*q", "h12", HB_FORMAT_LATEX, &out) == HB_OK);
  CHECK(take(out) == "h^{1,2} \\geq 2\\sqrt{q}\n");
  CHECK(hb_solve(cat.c, nullptr, "q - h12^2", "h12", HB_FORMAT_TEXT, &out) == HB_ERR_NOT_QUADRATIC);
  CHECK(hb_solve(cat.c, "no-such-tag", nullptr, "h11", HB_FORMAT_TEXT, &out) == HB_ERR_INVALID_ARGUMENT);

  hb_minimize_options mo;
  hb_minimize_options_default(&mo);
  REQUIRE(hb_minimize(cat.c, "h11", nullptr, &mo, HB_FORMAT_JSON, &out) == HB_OK);
  auto j = nlohmann::json::parse(take(out));
  CHECK(j["value"] == "46");
  CHECK(j["target"] == "h11");
  CHECK(j["witness"]["h"][1][1] == 46);

  mo.ceiling = 30;
  CHECK(hb_minimize(cat.c, "h11", nullptr, &mo, HB_FORMAT_JSON, &out) == HB_ERR_SEARCH_LIMIT);
  mo.ceiling = 0;
  REQUIRE(hb_minimize(cat.c, "h11", R"({"h02": 100})", &mo, HB_FORMAT_TEXT, &out) == HB_OK);
  CHECK(take(out).rfind("h11 >= ", 0) == 0);
  CHECK(hb_minimize(cat.c, "h11", "[1]", &mo, HB_FORMAT_TEXT, &out) == HB_ERR_PARSE);
}

TEST_CASE("series, asymptotics, reproduction and regularity") {
  Profile pf;
  REQUIRE(hb_profile_new(3, 5, "3", &pf.p) == HB_OK);
  char* out = nullptr;
  REQUIRE(hb_series(pf.p, "delta", 1, 3, HB_FORMAT_JSON, &out) == HB_OK);
  auto s = nlohmann::json::parse(take(out));
  CHECK(s["coefficients"][1] == "h11 - 2*q");
  CHECK(hb_series(pf.p, "epsilon", 1, 3, HB_FORMAT_JSON, &out) == HB_ERR_HYPOTHESIS);
  CHECK(hb_series(pf.p, "zeta", 1, 3, HB_FORMAT_JSON, &out) == HB_ERR_INVALID_ARGUMENT);

  hb_catalog_options co;
  hb_catalog_options_default(&co);
  co.second_order = 1;
  int qs[] = {100, 200};
  REQUIRE(hb_asymptotic(3, "3", "h02", qs, 2, &co, nullptr, HB_FORMAT_TSV, &out) == HB_OK);
  std::string tsv = take(out);
  CHECK(tsv.find("h02\t100\t390\t") != std::string::npos);
  CHECK(tsv.find("h02\t200\t790\t") != std::string::npos);

  int mismatches = -1;
  REQUIRE(hb_reproduce(HB_FORMAT_JSON, &mismatches, &out) == HB_OK);
  CHECK(mismatches == 0);
  CHECK(nlohmann::json::parse(take(out)).size() == 34);

  int reg = -1;
  CHECK(hb_regularity(3, 2, 1, 1, &reg) == HB_OK);
  CHECK(reg == 2);
  CHECK(hb_regularity(4, 1, 2, 2, &reg) == HB_ERR_INAPPLICABLE);
}
