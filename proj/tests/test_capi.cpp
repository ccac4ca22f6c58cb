/*
   Copyright 2026 The qtgenus Authors

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

#include <string>

#include "doctest.h"
#include "qtgenus/qtgenus.h"

namespace {

const char* kS2 = "[polytope]\nbuiltin = simplex 1\n[lambda]\nrow = 1 -1\n[circle]\nxi = 1\n";

std::string take(char* s) {
  std::string out = s ? s : "";
  qtg_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("parse, serialize and compare through the C API") {
  qtg_manifest* a = nullptr;
  REQUIRE(qtg_manifest_parse(kS2, &a) == QTG_OK);
  CHECK(std::string(qtg_last_error()).empty());
  char* text = nullptr;
  REQUIRE(qtg_manifest_serialize(a, &text) == QTG_OK);
  qtg_manifest* b = nullptr;
  REQUIRE(qtg_manifest_parse(text, &b) == QTG_OK);
  qtg_string_free(text);
  CHECK(qtg_manifest_equal(a, b) == 1);
  CHECK(qtg_manifest_equal(a, nullptr) == 0);
  CHECK(qtg_manifest_validate(a) == QTG_OK);
  qtg_manifest_free(a);
  qtg_manifest_free(b);
}

TEST_CASE("status codes") {
  qtg_manifest* m = nullptr;
  CHECK(qtg_manifest_parse("[polytope]\nbuiltin = simplex 1\n[lambda]\nrow = 1 q\n", &m) == QTG_INVALID_INPUT);
  CHECK(std::string(qtg_last_error()).find("line 4") != std::string::npos);
  CHECK(qtg_manifest_parse(nullptr, &m) == QTG_INVALID_INPUT);
  CHECK(qtg_manifest_load("/nonexistent/file.qtm", &m) == QTG_INVALID_INPUT);

  REQUIRE(qtg_manifest_parse("[polytope]\nbuiltin = simplex 2\n[lambda]\nrow = 1 0 2\nrow = 0 1 2\n", &m) == QTG_OK);
  CHECK(qtg_manifest_validate(m) == QTG_INVALID_INPUT);
  qtg_manifest_free(m);

  REQUIRE(qtg_manifest_parse("[polytope]\nbuiltin = simplex 2\n[lambda]\nrow = 1 0 -1\nrow = 0 1 -1\n", &m) == QTG_OK);
  qtg_genus_options opts{"witten", 2, nullptr, 0, nullptr, 1};
  char* json = nullptr;
  CHECK(qtg_genus(m, &opts, &json) == QTG_UNMET);
  CHECK(json == nullptr);
  CHECK(std::string(qtg_last_error()).find("not spin") != std::string::npos);
  qtg_manifest_free(m);
}

TEST_CASE("reports through the C API") {
  qtg_manifest* m = nullptr;
  REQUIRE(qtg_manifest_parse(kS2, &m) == QTG_OK);
  char* json = nullptr;
  REQUIRE(qtg_describe(m, &json) == QTG_OK);
  CHECK(take(json).find("\"spin\": true") != std::string::npos);

  const long xi[] = {1};
  qtg_genus_options opts{"witten", 3, xi, 1, nullptr, 2};
  REQUIRE(qtg_genus(m, &opts, &json) == QTG_OK);
  const std::string genus = take(json);
  CHECK(genus.find("\"0\",\n    \"0\",\n    \"0\",\n    \"0\"") != std::string::npos);

  REQUIRE(qtg_verify(m, "index-I", 3, 1, &json) == QTG_OK);
  CHECK(take(json).find("\"outcome\": \"pass\"") != std::string::npos);
  REQUIRE(qtg_verify(nullptr, "table1", 0, 1, &json) == QTG_OK);
  CHECK(take(json).find("\"matches\": 30") != std::string::npos);
  CHECK(qtg_verify(nullptr, "circle", 0, 1, &json) == QTG_INVALID_INPUT);
  qtg_manifest_free(m);

  REQUIRE(qtg_census(3, 1, 1, 1, &json) == QTG_OK);
  CHECK(take(json).find("[\n      4\n    ]") != std::string::npos);
  CHECK(qtg_census(3, 3, 1, 1, &json) == QTG_UNMET);

  long a = 0;
  CHECK(qtg_alpha(8, &a) == QTG_OK);
  CHECK(a == 31);
  CHECK(qtg_alpha(0, &a) == QTG_INVALID_INPUT);
  CHECK(std::string(qtg_version()) == "0.1.0");
}
