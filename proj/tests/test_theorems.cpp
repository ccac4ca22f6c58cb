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

#include <functional>
#include <numeric>
#include <random>

#include "doctest.h"
#include "error.hpp"
#include "genus/genera.hpp"
#include "theorems/beta_bound.hpp"
#include "theorems/census.hpp"
#include "theorems/circle.hpp"
#include "theorems/products.hpp"
#include "theorems/symmetry.hpp"
#include "theorems/vanishing.hpp"

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

std::string message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

EquivariantDegree4Class from_transpose(const std::vector<std::vector<long>>& a22t) {
  const auto t = Matrix::from_integers(a22t).transposed();
  return {Matrix(t.rows(), t.rows()), t, true};
}

bool primitive(const IntVector& v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, x);
  return g == 1;
}

}  // namespace

TEST_CASE("circle from explicit mixed components") {
  CHECK(find_circle(from_transpose({{1, 1}})) == IntVector{1, -1});
  CHECK(find_circle(from_transpose({{2, 4}})) == IntVector{2, -1});
  CHECK(find_circle(from_transpose({{1, 0, 1}, {0, 1, 1}})) == IntVector{1, 1, -1});
}

TEST_CASE("circle hypotheses") {
  CHECK(kind_of([] { find_circle(from_transpose({{1, 0}, {0, 1}})); }) == ErrorKind::hypothesis);
  const auto with_kernel = message_of([] { find_circle(from_transpose({{1, 1}, {2, 2}})); });
  const auto without = message_of([] { find_circle(from_transpose({{1, 0}, {0, 1}})); });
  CHECK(with_kernel.find("kernel vector exists") != std::string::npos);
  CHECK(without.find("trivial kernel") != std::string::npos);
  auto a = from_transpose({{1, 1}});
  a.a04_zero = false;
  CHECK(kind_of([&] { find_circle(a); }) == ErrorKind::hypothesis);
  a = from_transpose({{1, 1}});
  a.a40(0, 1) = 1;
  CHECK(kind_of([&] { find_circle(a); }) == ErrorKind::argument);
}

TEST_CASE("random circles are primitive kernel vectors") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-5, 5), den(1, 4), rank_t(2, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const int r = rank_t(rng);
    const int b2 = std::uniform_int_distribution<int>(0, r - 1)(rng);
    EquivariantDegree4Class a{Matrix(r, r), Matrix(r, b2), true};
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < b2; ++j) a.a22(i, j) = Rational(entry(rng), den(rng));
    const auto xi = find_circle(a);
    CHECK(primitive(xi));
    const auto res = restrict_to_circle(a, xi);
    for (const auto& c : res.mixed) CHECK(c.is_zero());
  }
}

TEST_CASE("degree-4 class of minus the tangent bundle") {
  CHECK(degree4_class(two_sphere()).a04_zero);
  CHECK(degree4_class(sphere_power(2)).a04_zero);
  CHECK(!degree4_class(complex_projective_space(2)).a04_zero);
  // rank T = b2 on (S^2)^2: the circle search refuses.
  CHECK(kind_of([] { find_circle(degree4_class(sphere_power(2))); }) == ErrorKind::hypothesis);
}

TEST_CASE("circle for CP^2 with p_1 cancelled by W") {
  const auto cp2 = complex_projective_space(2);
  const BundleSpec b{{}, {{1, 0, 0}, {1, 0, 0}, {1, 0, 0}}};
  const auto a = degree4_class(cp2, b);
  REQUIRE(a.a04_zero);
  CHECK(a.a22.rows() == 2);
  CHECK(a.a22.cols() == 1);
  const auto xi = find_circle(a);
  CHECK(primitive(xi));
  const auto res = restrict_to_circle(a, xi);
  for (const auto& c : res.mixed) CHECK(c.is_zero());
  CHECK_NOTHROW(index_I(cp2, xi, b));
  CHECK(kind_of([&] { index_I(cp2, {xi[0] + 1, xi[1]}, b); }) == ErrorKind::hypothesis);
}

TEST_CASE("index I examples") {
  CHECK(index_I(two_sphere(), {1}) == -1);
  CHECK(index_I(sphere_power(2), {1, 1}) == -2);
  CHECK(kind_of([] { index_I(complex_projective_space(2), {1, 2}); }) == ErrorKind::hypothesis);
  CHECK(kind_of([] { index_I(sphere_power(2), {1, 0}); }) == ErrorKind::degenerate_circle);
}

TEST_CASE("index I is constant on circles killing the mixed component") {
  struct Instance {
    QuasitoricManifold m;
    BundleSpec b;
  };
  const std::vector<Instance> suite = {
      {two_sphere(), {}},
      {sphere_power(2), {}},
      {sphere_power(3), {}},
      {complex_projective_space(2), {{}, {{1, 0, 0}, {1, 0, 0}, {1, 0, 0}}}},
      {complex_projective_space(2), {{{1, 0, 0}}, {{1, 0, 0}, {0, 1, 0}}}},
  };
  for (const auto& inst : suite) {
    const auto a = degree4_class(inst.m, inst.b);
    REQUIRE(a.a04_zero);
    const int n = inst.m.dimension();
    IntVector xi(n, -2);
    int defined = 0;
    while (true) {
      bool mixed_zero = true;
      for (const auto& c : restrict_to_circle(a, xi).mixed) mixed_zero = mixed_zero && c.is_zero();
      if (mixed_zero && primitive(xi)) {
        try {
          index_I(inst.m, xi, inst.b);
          ++defined;
        } catch (const Error& e) {
          CHECK(e.kind() == ErrorKind::degenerate_circle);
        }
      }
      int k = n - 1;
      while (k >= 0 && xi[k] == 2) xi[k--] = -2;
      if (k < 0) break;
      ++xi[k];
    }
    CHECK(defined > 0);
  }
}

TEST_CASE("negative I forces a vanishing equivariant index") {
  const std::vector<std::pair<QuasitoricManifold, IntVector>> suite = {
      {two_sphere(), {1}},
      {sphere_power(2), {1, 1}},
      {sphere_power(3), {1, 1, 1}},
      {sphere_power(2), {1, 2}},
  };
  for (const auto& [m, xi] : suite) {
    const auto v = vanishing_check(m, xi, 3);
    CHECK(v.applies);
    CHECK(v.vanishes);
  }
  CHECK(kind_of([] { vanishing_check(complex_projective_space(2), {1, 2}, 1); }) == ErrorKind::hypothesis);
}

TEST_CASE("stabilizer conditions") {
  const auto s2 = check_stabilizer_conditions(two_sphere(), {{1, 1}});
  CHECK(s2.first_chern);
  CHECK(s2.pontryagin);
  CHECK(s2.pairing == Rational(2L));
  CHECK(s2.all());
  for (int n = 2; n <= 4; ++n) {
    const auto cp = complex_projective_space(n);
    IntVector x(n + 1, 0);
    x[0] = 1;
    const auto r = check_stabilizer_conditions(cp, std::vector<IntVector>(n + 1 - 1, x));
    CHECK(r.pairing == Rational(1L));
    CHECK(r.pairing_nonzero);
  }
  const auto zero = check_stabilizer_conditions(complex_projective_space(2), {{0, 0, 0}, {0, 0, 0}});
  CHECK(!zero.pairing_nonzero);
  CHECK(!zero.all());
  CHECK(kind_of([] { check_stabilizer_conditions(two_sphere(), {}); }) == ErrorKind::argument);
}

TEST_CASE("product formula") {
  const auto s2 = two_sphere();
  const auto cp1 = complex_projective_space(1);
  for (const auto& m : {s2, s2.with_spinc(spin_gamma(s2))})
    for (auto engine : {Engine::localization, Engine::cohomological}) {
      const auto check = check_product_formula(m, cp1, {{1, 1}}, 3, engine);
      CHECK(check.holds());
    }
}

TEST_CASE("beta bound bundles on synthetic CP^n") {
  for (int n = 3; n <= 6; ++n) {
    const auto s = synthetic_connected_sum(n, {1}, {n + 3});
    const auto b = beta_bound_bundles(s, 0);
    CHECK(b.which_case == 1);
    CHECK(b.all_checks());
    CHECK(b.euler_pairing.abs() == Rational(2L));
    CHECK(b.bundles.W.empty());
    const auto model = beta_bound_model(s, b);
    Twist t;
    t.bundles = b.bundles;
    const auto phi = cohomological_index(model, t, 3);
    const auto via_euler = cohomological_index(model, t, 3, VFactorForm::euler_times_q2p);
    RationalQSeries constant(3);
    constant[0] = b.euler_pairing;
    CHECK(phi == constant);
    CHECK(via_euler == constant);
  }
}

TEST_CASE("beta bound second case and several summands") {
  const auto s = synthetic_connected_sum(3, {1}, {5});
  CHECK(kind_of([&] { beta_bound_case(s, 0, 1); }) == ErrorKind::precondition);
  CHECK(beta_bound_case(s, 0, 2).all_checks());
  const auto s2 = synthetic_connected_sum(4, {1}, {6});
  const auto b2 = beta_bound_bundles(s2, 0);
  CHECK(b2.which_case == 2);
  CHECK(b2.all_checks());
  CHECK(b2.bundles.W.size() == 2);

  const auto pair = synthetic_connected_sum(3, {1, -1}, {6, 2});
  const auto b = beta_bound_bundles(pair, 0);
  CHECK(b.which_case == 1);
  CHECK(b.all_checks());
  CHECK(b.euler_pairing.abs() == Rational(2L));
  Twist t;
  t.bundles = b.bundles;
  const auto phi = cohomological_index(beta_bound_model(pair, b), t, 0);
  CHECK(phi[0] == Rational(1L << b.bundles.W.size()) * b.euler_pairing);
}

TEST_CASE("beta bound holds on real CP^3") {
  const auto s = connected_sum_structure(complex_projective_space(3));
  CHECK(s.beta == std::vector<long>{4});
  CHECK(kind_of([&] { beta_bound_bundles(s, 0); }) == ErrorKind::hypothesis);
}

TEST_CASE("alpha table") {
  for (long l = 1; l <= 30; ++l) CHECK(alpha(l) == tabulated_alpha(l));
  CHECK(alpha(4) == 13);
  CHECK(alpha(20) == 41);
  CHECK(kind_of([] { alpha(0); }) == ErrorKind::argument);
  CHECK(extremal_groups(1) == std::vector<std::string>{"Spin(3)"});
  CHECK(extremal_groups(2) == std::vector<std::string>{"G2"});
  CHECK(extremal_groups(3) == std::vector<std::string>{"Spin(7)", "Sp(3)"});
  CHECK(extremal_groups(5).empty());
  CHECK(extremal_groups(6).size() == 3);
  CHECK(extremal_groups(8) == std::vector<std::string>{"E8"});
  CHECK(extremal_groups(12).empty());
  CHECK(extremal_groups(15) == std::vector<std::string>{"Spin(31)", "Sp(15)"});
}

TEST_CASE("symmetry bounds") {
  for (long k = 1; k <= 4; ++k) {
    SymmetryBoundInput in;
    in.factors.assign(k, {8, 248});
    const auto b = symmetry_bounds(in);
    CHECK(b.lower == 248 * k);
    CHECK(b.upper == 248 * k);
  }
  SymmetryBoundInput mixed{{{1, 3}, {2, 14}}, 3};
  const auto b = symmetry_bounds(mixed);
  CHECK(b.lower == 17);
  CHECK(b.upper == 7 * 3 + 3);
  CHECK(kind_of([] { symmetry_bounds({{{2, 9}}, 0}); }) == ErrorKind::argument);
}

TEST_CASE("simplex chains") {
  const auto p = simplex_chain(3, 2);
  CHECK(p.facet_count() == 5);
  CHECK(p.vertex_count() == 6);
  CHECK(simplex_chain(4, 3).facet_count() == 7);
}

TEST_CASE("census") {
  const auto one = finiteness_census(3, 1, 2);
  CHECK(one.matched > 0);
  CHECK(one.betas == std::vector<std::vector<long>>{{4}});
  CHECK(one.bounds_hold());
  const auto two = finiteness_census(3, 2, 1);
  CHECK(two.matched > 0);
  CHECK(two.bounds_hold());
  CHECK(finiteness_census(3, 2, 1, 4).betas == two.betas);
  CHECK(kind_of([] { finiteness_census(3, 3, 1); }) == ErrorKind::hypothesis);
  CHECK(kind_of([] { finiteness_census(2, 1, 1); }) == ErrorKind::argument);
}
