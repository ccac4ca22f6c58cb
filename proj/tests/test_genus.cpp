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

#include "doctest.h"
#include "error.hpp"
#include "exactalg/interpolate.hpp"
#include "genus/genera.hpp"

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

RationalQSeries zeros(int order) { return RationalQSeries(order); }

QuasitoricManifold spin_version(const QuasitoricManifold& m) { return m.with_spinc(spin_gamma(m)); }

}  // namespace

TEST_CASE("fixed-point contributions of the spin two-sphere cancel") {
  const auto s2 = spin_version(two_sphere());
  const auto fps = fixed_points(s2);
  const Twist none;
  for (const auto& root : sample_points(4)) {
    RationalQSeries sum(3);
    for (const auto& fp : fps) sum += fixed_point_contribution(fp, {1}, none, s2.spinc_coefficients(), root, 3);
    CHECK(sum == zeros(3));
  }
}

TEST_CASE("single contribution by hand") {
  // One weight w = 1 at t^(1/2) = 2, spin^c weight 0: 1 / (2 - 1/2) = 2/3.
  LocalWeights lw;
  lw.tangent = {1};
  const auto c = fixed_point_contribution(lw, Rational(2L), 1);
  CHECK(c[0] == Rational(2, 3));
  // q^1: (1-q)^2 / ((1-4q)(1-q/4)) -> -2 + 4 + 1/4.
  CHECK(c[1] == Rational(2, 3) * Rational(9, 4));
  CHECK(kind_of([&] { fixed_point_contribution(lw, Rational(1L), 1); }) == ErrorKind::argument);
}

TEST_CASE("degenerate circles are rejected") {
  const auto cp2 = complex_projective_space(2);
  CHECK(kind_of([&] { equivariant_index(cp2, {1, 1}, Twist{}, 1); }) == ErrorKind::degenerate_circle);
  CHECK(kind_of([&] { equivariant_index(cp2, {0, 0}, Twist{}, 1); }) == ErrorKind::degenerate_circle);
}

TEST_CASE("equivariant index of the spin two-sphere vanishes identically") {
  const auto e = equivariant_index(spin_version(two_sphere()), {1}, Twist{}, 4);
  for (int k = 0; k <= 4; ++k) CHECK(e.series[k].is_zero());
}

TEST_CASE("CP2 equivariant index matches the cohomological value at t = 1") {
  const auto cp2 = complex_projective_space(2);
  const auto e = equivariant_index(cp2, {1, 2}, Twist{}, 0);
  CHECK(!e.series[0].is_zero());
  const auto c = cohomological_index(cp2, Twist{}, 0);
  CHECK(e.series[0].at_one() == c[0]);
  // With c = 3x this is the Todd genus.
  CHECK(c[0] == Rational(1L));
}

TEST_CASE("threading does not change the equivariant index") {
  const auto cp3 = complex_projective_space(3);
  const auto a = equivariant_index(cp3, {1, 2, 4}, elliptic_twist(), 2, 1);
  const auto b = equivariant_index(cp3, {1, 2, 4}, elliptic_twist(), 2, 3);
  CHECK(a.series == b.series);
}

TEST_CASE("localization and cohomology agree") {
  std::vector<QuasitoricManifold> suite{complex_projective_space(2), complex_projective_space(3),
                                        sphere_power(2), product(two_sphere(), complex_projective_space(2))};
  for (const auto& m : suite) {
    Twist with_line;
    IntVector line(m.facet_count(), 0);
    line[0] = 1;
    with_line.bundles.V = {line};
    IntVector wline(m.facet_count(), 0);
    wline[1] = 2;
    with_line.bundles.W = {wline};
    std::vector<Twist> twists{Twist{}, signature_twist(), with_line};
    if (is_spin(m)) twists.push_back(elliptic_twist());
    for (const Twist& t : twists) {
      CAPTURE(m.facet_count());
      CHECK(index(m, t, 3) == cohomological_index(m, t, 3));
    }
  }
}

TEST_CASE("classical values") {
  for (int n = 1; n <= 4; ++n) {
    const auto cpn = complex_projective_space(n);
    CHECK(euler_characteristic(cpn) == Rational(static_cast<long>(n + 1)));
    CHECK(cpn.polytope().vertex_count() == static_cast<size_t>(n + 1));
  }
  CHECK(euler_characteristic(sphere_power(3)) == Rational(8L));
  CHECK(signature(complex_projective_space(2)) == Rational(1L));
  CHECK(signature(complex_projective_space(2), Engine::cohomological) == Rational(1L));
  CHECK(signature(sphere_power(2)) == Rational(0L));
  CHECK(signature(complex_projective_space(4)) == Rational(1L));
  CHECK(a_hat_genus(complex_projective_space(3)) == Rational(0L));
  CHECK(a_hat_genus(complex_projective_space(3), Engine::cohomological) == Rational(0L));
}

TEST_CASE("Witten and elliptic genera") {
  for (int n = 1; n <= 3; ++n) CHECK(witten_genus(sphere_power(n), 3) == zeros(3));
  CHECK(elliptic_genus(sphere_power(2), 0)[0] == Rational(0L));
  CHECK(kind_of([] { witten_genus(complex_projective_space(2), 2); }) == ErrorKind::precondition);
  CHECK(kind_of([] { elliptic_genus(complex_projective_space(2), 2); }) == ErrorKind::precondition);
  const auto cp3 = witten_genus(complex_projective_space(3), 3);
  CHECK(cp3 == witten_genus(complex_projective_space(3), 3, Engine::cohomological));
}

TEST_CASE("spin^c prefactor identity with e(V)") {
  // CP3 with c = 4x and V = L(2x) + L(x) + L(x), so c_1(V) = c.
  const auto cp3 = complex_projective_space(3);
  Twist t;
  t.bundles.V = {{0, 0, 0, 2}, {0, 0, 0, 1}, {0, 0, 0, 1}};
  const auto a = cohomological_index(cp3, t, 3, VFactorForm::spinc_times_q2);
  const auto b = cohomological_index(cp3, t, 3, VFactorForm::euler_times_q2p);
  CHECK(a == b);
  CHECK(a == index(cp3, t, 3));
  Twist wrong;
  wrong.bundles.V = {{0, 0, 0, 1}};
  CHECK(kind_of([&] { cohomological_index(cp3, wrong, 1, VFactorForm::euler_times_q2p); }) ==
        ErrorKind::argument);
}

TEST_CASE("product formula") {
  const auto s2 = two_sphere();
  const auto cp1 = complex_projective_space(1);
  for (const auto& m : {s2, spin_version(s2)}) {
    const auto prod = product(m, cp1);
    Twist pulled;
    pulled.bundles.V = {{0, 0, 1, 1}};
    Twist on_factor;
    on_factor.bundles.V = {{1, 1}};
    const auto lhs = index(prod, pulled, 3);
    const auto rhs = index(m, Twist{}, 3) * index(cp1, on_factor, 3);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("elliptic twist on a non-spin manifold fails the parity check") {
  CHECK(kind_of([] { equivariant_index(complex_projective_space(2), {1, 2}, elliptic_twist(), 1); }) ==
        ErrorKind::consistency);
}

TEST_CASE("W spin check") {
  const auto cp2 = complex_projective_space(2);
  CHECK(w_is_spin(cp2, {{}, {{1, 0, 0}, {0, 1, 0}}}));
  CHECK(!w_is_spin(cp2, {{}, {{1, 0, 0}}}));
  CHECK(w_is_spin(cp2, {{}, {{2, 0, 0}}}));
}
