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

#include <filesystem>
#include <functional>
#include <random>

#include "doctest.h"
#include "error.hpp"
#include "io/reports.hpp"

using namespace qtg;

namespace {

std::string message_of(const std::function<void()>& fn, ErrorKind expected) {
  try {
    fn();
  } catch (const Error& e) {
    CHECK(e.kind() == expected);
    return e.what();
  }
  FAIL("no error raised");
  return {};
}

const char* kCp2 = R"(# comment
[polytope]
builtin = simplex 2

[lambda]
row = 1 0 -1   # trailing comment
row = 0 1 -1
)";

}  // namespace

TEST_CASE("parse a builtin manifest") {
  const auto m = parse_manifest(kCp2);
  CHECK(m.polytope.builtin == "simplex");
  CHECK(m.polytope.params == std::vector<long>{2});
  CHECK(m.lambda == std::vector<IntVector>{{1, 0, -1}, {0, 1, -1}});
  CHECK(!m.gamma);
  const auto q = build_manifold(m);
  CHECK(q.dimension() == 2);
  CHECK(q.lambda() == complex_projective_space(2).lambda());
}

TEST_CASE("parse an explicit manifest with every section") {
  const std::string text = R"([polytope]
dimension = 1
facets = 2
vertex = 1
vertex = 2
[lambda]
row = 1 -1
[spinc]
gamma = 1 -1
[bundles]
V = 1 1
W = 2 0
W = 0 2
[circle]
xi = 3
[classes]
x = 1 1
)";
  const auto m = parse_manifest(text);
  CHECK(m.polytope.vertices == std::vector<std::vector<int>>{{1}, {2}});
  CHECK(*m.gamma == IntVector{1, -1});
  CHECK(m.bundles.V.size() == 1);
  CHECK(m.bundles.W.size() == 2);
  CHECK(*m.circle == IntVector{3});
  CHECK(m.classes.size() == 1);
  CHECK(build_manifold(m).polytope() == simplex(1));
}

TEST_CASE("diagnostics carry line numbers") {
  auto parse = [](const std::string& t) { return [t] { parse_manifest(t); }; };
  CHECK(message_of(parse("[polytope]\nbuiltin = simplex 2\n[lambda]\nrow = 1 x\n"), ErrorKind::parse).find("line 4") !=
        std::string::npos);
  CHECK(message_of(parse("[polytope]\nbuiltin = simplex 2\n[nonsense]\n"), ErrorKind::parse).find("line 3") !=
        std::string::npos);
  CHECK(message_of(parse("row = 1\n"), ErrorKind::parse).find("line 1") != std::string::npos);
  CHECK(message_of(parse("[polytope]\nfoo = 1\n"), ErrorKind::parse).find("unknown key") != std::string::npos);
  CHECK(message_of(parse("[polytope]\nbuiltin = simplex 2\n"), ErrorKind::parse).find("[lambda]") !=
        std::string::npos);
  message_of(parse("[polytope]\nbuiltin = simplex 2\ndimension = 2\n[lambda]\nrow = 1\n"), ErrorKind::parse);
  message_of(parse("[polytope]\ndimension = 2\n[lambda]\nrow = 1\n"), ErrorKind::parse);
  message_of(parse("[polytope]\nbuiltin = simplex 2\n[lambda]\nrow = 1\n[lambda]\n"), ErrorKind::parse);
  message_of(parse("[polytope\n"), ErrorKind::parse);
  message_of(parse("[polytope]\nvertex = 0 1\n"), ErrorKind::parse);
}

TEST_CASE("builtin and validation errors") {
  auto build = [](const std::string& t) { return [t] { build_manifold(parse_manifest(t)); }; };
  message_of(build("[polytope]\nbuiltin = sphere 2\n[lambda]\nrow = 1\n"), ErrorKind::parse);
  message_of(build("[polytope]\nbuiltin = simplex 2 3\n[lambda]\nrow = 1\n"), ErrorKind::parse);
  const auto msg = message_of(build("[polytope]\nbuiltin = simplex 2\n[lambda]\nrow = 1 0 2\nrow = 0 1 2\n"),
                              ErrorKind::validation);
  CHECK(msg.find("{1,3}") != std::string::npos);
  CHECK(msg.find("{2,3}") != std::string::npos);
  message_of(build("[polytope]\nbuiltin = simplex 2\n[lambda]\nrow = 1 0\nrow = 0 1\n"), ErrorKind::argument);
}

TEST_CASE("round trip on the shipped manifests") {
  const std::filesystem::path dir = QTG_MANIFEST_DIR;
  int count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".qtm") continue;
    const auto once = load_manifest(entry.path().string());
    const auto twice = parse_manifest(serialize_manifest(once));
    CHECK(once == twice);
    CHECK(serialize_manifest(twice) == serialize_manifest(once));
    CHECK_NOTHROW(build_manifold(once));
    ++count;
  }
  CHECK(count >= 5);
}

TEST_CASE("round trip on random manifests") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> entry(-9, 9);
  std::uniform_int_distribution<int> len(1, 5), coin(0, 1);
  auto vec = [&](int n) {
    IntVector v(n);
    for (auto& x : v) x = entry(rng);
    return v;
  };
  for (int trial = 0; trial < 200; ++trial) {
    Manifest m;
    if (coin(rng)) {
      m.polytope.builtin = coin(rng) ? "cube" : "simplex";
      m.polytope.params = {len(rng)};
    } else {
      m.polytope.dimension = len(rng);
      m.polytope.facets = len(rng) + 2;
      for (int v = 0; v < len(rng); ++v) {
        std::vector<int> vertex;
        for (int f = 0; f < m.polytope.dimension; ++f) vertex.push_back(1 + (f + v) % m.polytope.facets);
        m.polytope.vertices.push_back(vertex);
      }
    }
    const int cols = len(rng);
    for (int r = 0; r < len(rng); ++r) m.lambda.push_back(vec(cols));
    if (coin(rng)) m.gamma = vec(cols);
    for (int i = 0; i < len(rng) - 1; ++i) m.bundles.V.push_back(vec(cols));
    for (int i = 0; i < len(rng) - 1; ++i) m.bundles.W.push_back(vec(cols));
    if (coin(rng)) m.circle = vec(len(rng));
    for (int i = 0; i < len(rng) - 1; ++i) m.classes.push_back(vec(cols));
    CHECK(parse_manifest(serialize_manifest(m)) == m);
  }
}

TEST_CASE("describe report") {
  const auto j = describe_report(parse_manifest(kCp2));
  CHECK(j["n"] == 2);
  CHECK(j["m"] == 3);
  CHECK(j["chi"] == 3);
  CHECK(j["lefschetz_chi"] == "3");
  CHECK(j["b2"] == 1);
  CHECK(j["p1"] == "3*v3^2");
  CHECK(j["spin"] == false);
  CHECK(j.contains("spin_obstruction"));
}

TEST_CASE("genus report is identical across thread counts and key order is sorted") {
  const auto m = parse_manifest(kCp2);
  GenusRequest one;
  one.twist = "signature";
  one.q_order = 2;
  GenusRequest many = one;
  many.threads = 4;
  const auto a = genus_report(m, one).dump();
  CHECK(a == genus_report(m, many).dump());
  CHECK(a.find("\"coefficients\"") < a.find("\"engine\""));
  CHECK(genus_report(m, one)["coefficients"][0] == "1");
  GenusRequest eq;
  eq.equivariant = IntVector{1, 2};
  eq.q_order = 1;
  CHECK(genus_report(m, eq)["coefficients"].size() == 2);
  GenusRequest witten;
  witten.twist = "witten";
  message_of([&] { genus_report(m, witten); }, ErrorKind::precondition);
  GenusRequest bad;
  bad.twist = "bogus";
  message_of([&] { genus_report(m, bad); }, ErrorKind::argument);
}

TEST_CASE("verify reports") {
  CHECK(verify_report(std::nullopt, "table1", 0, 1)["matches"] == 30);
  message_of([] { verify_report(std::nullopt, "circle", 0, 1); }, ErrorKind::argument);
  message_of([] { verify_report(std::nullopt, "nope", 0, 1); }, ErrorKind::argument);
  const auto s2 = parse_manifest("[polytope]\nbuiltin = simplex 1\n[lambda]\nrow = 1 -1\n[circle]\nxi = 1\n");
  const auto r = verify_report(s2, "index-I", 3, 1);
  CHECK(r["index_I"] == -1);
  CHECK(r["vanishes"] == true);
  CHECK(r["outcome"] == kPass);
  const auto c = census_report(3, 1, 1, 2);
  CHECK(c["outcome"] == kPass);
  CHECK(c.dump() == census_report(3, 1, 1, 1).dump());
}
