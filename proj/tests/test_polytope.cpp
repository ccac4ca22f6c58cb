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

#include <random>
#include <set>

#include "doctest.h"
#include "error.hpp"
#include "polytope/quasitoric.hpp"

using namespace qtg;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::internal;
}

void check_dual_basis(const QuasitoricManifold& m) {
  const auto fps = fixed_points(m);
  CHECK(fps.size() == m.polytope().vertex_count());
  for (const auto& fp : fps) {
    const int n = m.dimension();
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        CHECK(dot(fp.weights[i], m.lambda().column(fp.vertex[k])) == (i == k ? 1 : 0));
    CHECK((fp.sign == 1 || fp.sign == -1));
  }
}

}  // namespace

TEST_CASE("standard polytopes") {
  const auto s2 = simplex(2);
  CHECK(s2.facet_count() == 3);
  CHECK(s2.vertices() == std::vector<Vertex>{{0, 1}, {0, 2}, {1, 2}});
  const auto i = cube(1);
  CHECK(i.facet_count() == 2);
  CHECK(i.vertices() == std::vector<Vertex>{{0}, {1}});
  CHECK(polygon(4) == cube(2));
  CHECK(cube(3).vertex_count() == 8);
  CHECK(kind_of([] { simplex(0); }) == ErrorKind::argument);
  CHECK(kind_of([] { polygon(2); }) == ErrorKind::argument);
}

TEST_CASE("invalid incidence data is rejected") {
  CHECK(kind_of([] { SimplePolytope(2, 3, {{0, 1}, {1, 2}}); }) == ErrorKind::argument);
  CHECK(kind_of([] { SimplePolytope(2, 4, {{0, 1}, {1, 2}, {0, 2}}); }) == ErrorKind::argument);
  CHECK(kind_of([] { SimplePolytope(1, 4, {{0}, {1}, {2}, {3}}); }) == ErrorKind::argument);
}

TEST_CASE("products") {
  const auto sq = product(cube(1), cube(1));
  CHECK(sq.facet_count() == 4);
  CHECK(sq.vertex_count() == 4);
  // The product numbers the second interval's facets 2,3; the cube uses 1,2 for the first direction pair.
  CHECK(relabel(sq, {0, 2, 1, 3}) == cube(2));
  const auto prism = product(simplex(1), simplex(2));
  CHECK(prism.facet_count() == 5);
  CHECK(prism.vertex_count() == 6);
  CHECK(product(simplex(2), cube(2)).vertex_count() == 12);
}

TEST_CASE("connected sums") {
  const auto d = simplex(2);
  const auto sq = connected_sum(d, d.vertices().back(), d, d.vertices().front());
  CHECK(sq.facet_count() == 4);
  CHECK(sq.vertex_count() == 4);
  CHECK(kind_of([&] { connected_sum(d, {0, 3}, d, {0, 1}); }) == ErrorKind::argument);
  const auto cut = vertex_cut(cube(3), {0, 1, 2});
  CHECK(cut.facet_count() == 7);
  CHECK(cut.vertex_count() == 10);
}

TEST_CASE("connected sum counts on random inputs") {
  std::mt19937 rng(5);
  const std::vector<SimplePolytope> pool3{simplex(3), cube(3), product(simplex(1), simplex(2)),
                                          vertex_cut(simplex(3), {0, 1, 2})};
  for (int trial = 0; trial < 30; ++trial) {
    const auto& p = pool3[rng() % pool3.size()];
    const auto& q = pool3[rng() % pool3.size()];
    const auto& v = p.vertices()[rng() % p.vertex_count()];
    const auto& w = q.vertices()[rng() % q.vertex_count()];
    const auto s = connected_sum(p, v, q, w);
    CHECK(s.vertex_count() == p.vertex_count() + q.vertex_count() - 2);
    CHECK(s.facet_count() == p.facet_count() + q.facet_count() - 3);
  }
}

TEST_CASE("validate characteristic matrices") {
  const auto d = simplex(2);
  CHECK(validate(CharacteristicMatrix::from_columns({{1, 0}, {0, 1}, {-1, -1}}), d).empty());
  const auto bad = validate(CharacteristicMatrix::from_columns({{1, 0}, {0, 1}, {0, 2}}), d);
  CHECK(bad == std::vector<Vertex>{{0, 2}, {1, 2}});
  CHECK(validate(CharacteristicMatrix::from_columns({{1}, {1}}), cube(1)).empty());
  CHECK(kind_of([&] { validate(CharacteristicMatrix::from_columns({{1}, {1}}), d); }) == ErrorKind::argument);
  CHECK(kind_of([&] {
          QuasitoricManifold(d, CharacteristicMatrix::from_columns({{1, 0}, {0, 1}, {0, 2}}));
        }) == ErrorKind::validation);
  CHECK(kind_of([&] {
          QuasitoricManifold(d, CharacteristicMatrix::from_columns({{1, 0}, {0, 1}, {-1, -1}}), {1, 2, 1});
        }) == ErrorKind::argument);
}

TEST_CASE("fixed points of CP2") {
  const auto cp2 = complex_projective_space(2);
  const auto fps = fixed_points(cp2);
  REQUIRE(fps.size() == 3);
  CHECK(fps[0].vertex == Vertex{0, 1});
  CHECK(fps[0].weights == std::vector<IntVector>{{1, 0}, {0, 1}});
  CHECK(fps[0].sign == 1);
  CHECK(fps[2].vertex == Vertex{1, 2});
  CHECK(fps[2].weights == std::vector<IntVector>{{-1, 1}, {-1, 0}});
  CHECK(fps[0].facet_weight(2) == IntVector{0, 0});
  check_dual_basis(cp2);
}

TEST_CASE("fixed points of the two-sphere") {
  const auto fps = fixed_points(two_sphere());
  REQUIRE(fps.size() == 2);
  CHECK(fps[0].weights[0] == IntVector{1});
  CHECK(fps[1].weights[0] == IntVector{-1});
  CHECK(fps[0].sign == 1);
  CHECK(fps[1].sign == 1);

  // Same sphere with the other omniorientation: the poles have equal weights
  // and opposite signs.
  const auto flipped = fixed_points(QuasitoricManifold(cube(1), CharacteristicMatrix::from_columns({{1}, {1}})));
  CHECK(flipped[0].weights[0] == IntVector{1});
  CHECK(flipped[1].weights[0] == IntVector{1});
  CHECK(flipped[0].minor_determinant == 1);
  CHECK(flipped[1].minor_determinant == 1);
  CHECK(flipped[0].sign == 1);
  CHECK(flipped[1].sign == -1);
}

TEST_CASE("dual basis on test manifolds") {
  check_dual_basis(complex_projective_space(3));
  check_dual_basis(sphere_power(3));
  check_dual_basis(product(two_sphere(), complex_projective_space(2)));
}

TEST_CASE("enumeration examples") {
  const auto interval = enumerate_characteristic_matrices(cube(1), 1);
  CHECK(interval.size() == 2);
  const auto tri = enumerate_characteristic_matrices(simplex(2), 1);
  CHECK(tri.size() == 4);
  std::set<IntVector> third;
  for (const auto& m : tri) third.insert(m.column(2));
  CHECK(third == std::set<IntVector>{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}});
  CHECK(enumerate_characteristic_matrices(simplex(2), 0).empty());
}

TEST_CASE("enumerated matrices validate and threading is deterministic") {
  for (const auto& p : {simplex(3), cube(2), cube(3), vertex_cut(simplex(3), {0, 1, 2})}) {
    const auto serial = enumerate_characteristic_matrices(p, 1, 1);
    const auto parallel = enumerate_characteristic_matrices(p, 1, 4);
    CHECK(serial == parallel);
    CHECK(!serial.empty());
    for (const auto& m : serial) CHECK(validate(m, p).empty());
  }
}
