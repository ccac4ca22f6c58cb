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

#include "cohomology/connected_sum.hpp"
#include "doctest.h"
#include "error.hpp"

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

QuasitoricManifold cp_sum(int n, const std::vector<IntVector>& extra_columns) {
  // Delta^n # Delta^n: the second simplex contributes one new facet.
  const auto d = simplex(n);
  const auto p = connected_sum(d, d.vertices().back(), d, d.vertices().front());
  std::vector<IntVector> cols;
  for (int i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    cols.push_back(e);
  }
  for (const auto& c : extra_columns) cols.push_back(c);
  return {p, CharacteristicMatrix::from_columns(cols)};
}

}  // namespace

TEST_CASE("face ring of CP2") {
  const auto cp2 = complex_projective_space(2);
  const auto model = characteristic_model(cp2);
  CHECK(model.ring->betti_numbers() == std::vector<size_t>{1, 1, 1});
  CHECK(model.ring->basis(1) == std::vector<Monomial>{{0, 0, 1}});
  const auto& v = model.generators;
  CHECK(integrate(v[0] * v[1]) == Rational(1L));
  CHECK(integrate(v[2] * v[2]) == Rational(1L));
  CHECK(v[0] == v[2]);
  CHECK(pontryagin_p1(cp2).coefficients() == (Rational(3L) * (v[2] * v[2])).coefficients());
  CHECK(pontryagin_p1(cp2).str() == "3*v3^2");
  CHECK(kind_of([&] { integrate(v[0]); }) == ErrorKind::argument);
}

TEST_CASE("face ring of the square") {
  const auto m = sphere_power(2);
  const auto model = characteristic_model(m);
  CHECK(model.ring->betti_numbers() == std::vector<size_t>{1, 2, 1});
  const auto& v = model.generators;
  CHECK(integrate(v[0] * v[2]) == Rational(0L));
  CHECK(integrate(v[0] * v[1]) != Rational(0L));
  CHECK(pontryagin_p1(m).is_zero());
  CHECK(!spinc_c1(m).is_zero());
}

TEST_CASE("b2 and Poincare duality") {
  for (const auto& m : {complex_projective_space(3), complex_projective_space(4), sphere_power(3),
                        product(two_sphere(), complex_projective_space(2)), cp_sum(3, {{-1, -1, -1}, {-1, 0, 0}})}) {
    const auto betti = build_face_ring(m)->betti_numbers();
    CHECK(betti[1] == static_cast<size_t>(m.facet_count() - m.dimension()));
    for (size_t d = 0; d < betti.size(); ++d) CHECK(betti[d] == betti[betti.size() - 1 - d]);
  }
}

TEST_CASE("spin detection") {
  CHECK(is_spin(two_sphere()));
  CHECK(is_spin(sphere_power(2)));
  CHECK(!is_spin(complex_projective_space(2)));
  CHECK(is_spin(complex_projective_space(3)));
  CHECK(kind_of([] { spin_gamma(complex_projective_space(2)); }) == ErrorKind::precondition);
  const auto cp3 = complex_projective_space(3);
  const auto gamma = spin_gamma(cp3);
  for (long g : gamma) CHECK(g % 2 != 0);
  CHECK(characteristic_model(cp3.with_spinc(gamma)).spinc->is_zero());
}

TEST_CASE("beta coefficients") {
  CHECK(beta_coefficients(complex_projective_space(3)) == std::vector<Rational>{4L});
  CHECK(beta_coefficients(complex_projective_space(5)) == std::vector<Rational>{6L});
  CHECK(kind_of([] { beta_coefficients(complex_projective_space(2)); }) == ErrorKind::shape);
  CHECK(kind_of([] { beta_coefficients(sphere_power(3)); }) == ErrorKind::shape);

  const auto blowup = cp_sum(3, {{-1, -1, -1}, {-1, 0, 0}});
  const auto s = connected_sum_structure(blowup);
  CHECK(s.k == 2);
  for (long b : s.beta) {
    CHECK(b > 0);
    CHECK(b <= 4);
  }
  CHECK(s.signs[0] * s.signs[1] == -1);
}

TEST_CASE("synthetic connected sum") {
  const auto s = synthetic_connected_sum(4, {1, -1}, {5, 3});
  const auto& v = s.model.generators;
  CHECK((v[0] * v[1]).is_zero());
  CHECK(integrate(v[0].pow(4)) == Rational(1L));
  CHECK(integrate(v[1].pow(4)) == Rational(-1L));
  CHECK(pontryagin_p1(s.model) == Rational(5L) * (v[0] * v[0]) + Rational(3L) * (v[1] * v[1]));
  CHECK(s.w2 == std::vector<int>{1, 1});
}
