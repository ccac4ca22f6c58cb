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

// One line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "cohomology/connected_sum.hpp"
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

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int number, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs <= limit_seconds;
  const bool pass = out.ok && in_time;
  if (!pass) ++failures;
  std::printf("criterion %d %s: %s (%.3f s, limit %g s)%s%s\n", number, pass ? "PASS" : "FAIL", title, secs,
              limit_seconds, out.detail.empty() ? "" : "; ", out.detail.c_str());
  std::fflush(stdout);
}

bool all_zero(const RationalQSeries& s) {
  for (int k = 0; k <= s.order(); ++k)
    if (!s[k].is_zero()) return false;
  return true;
}

std::vector<QuasitoricManifold> sample_enumerated(const SimplePolytope& p, int bound, size_t count,
                                                  std::mt19937& rng) {
  auto all = enumerate_characteristic_matrices(p, bound);
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<QuasitoricManifold> out;
  for (size_t i = 0; i < all.size() && out.size() < count; ++i) out.emplace_back(p, all[i]);
  return out;
}

}  // namespace

int main() {
  criterion(1, "alpha_l matches the table for l = 1..30", 0.001, [] {
    Outcome o;
    for (long l = 1; l <= 30; ++l)
      if (alpha(l) != tabulated_alpha(l)) {
        o.ok = false;
        o.detail += "mismatch at l=" + std::to_string(l) + " ";
      }
    o.ok = o.ok && alpha(4) == 13 && alpha(20) == 41;
    return o;
  });

  criterion(2, "index with the beta-bound bundles on synthetic CP^n equals <e(V),[M]> = +-2, n = 3..6", 4.0, [] {
    Outcome o;
    for (int n = 3; n <= 6; ++n) {
      const auto start = std::chrono::steady_clock::now();
      const auto s = synthetic_connected_sum(n, {1}, {n + 3});
      const auto b = beta_bound_bundles(s, 0);
      Twist t;
      t.bundles = b.bundles;
      const auto phi = cohomological_index(beta_bound_model(s, b), t, 4);
      RationalQSeries expected(4);
      expected[0] = b.euler_pairing;
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      const bool ok = b.which_case == 1 && b.all_checks() && b.euler_pairing.abs() == Rational(2L) &&
                      phi == expected && secs < 1.0;
      o.ok = o.ok && ok;
      o.detail += "n=" + std::to_string(n) + ":" + phi[0].str() + (ok ? " " : "(bad) ");
    }
    return o;
  });

  criterion(3, "localization and cohomological indices agree to q^4 on the instance suite", 60.0, [] {
    std::vector<QuasitoricManifold> suite;
    for (int n = 1; n <= 4; ++n) suite.push_back(complex_projective_space(n));
    for (int n = 1; n <= 3; ++n) suite.push_back(sphere_power(n));
    // Square with cyclic facets: a*b = 2 gives +-(CP^2 # CP^2), a*b = 0 gives CP^2 # -CP^2.
    suite.emplace_back(polygon(4), CharacteristicMatrix::from_columns({{1, 0}, {0, 1}, {-1, 1}, {2, -1}}));
    suite.emplace_back(polygon(4), CharacteristicMatrix::from_columns({{1, 0}, {0, 1}, {-1, 2}, {1, -1}}));
    suite.emplace_back(polygon(4), CharacteristicMatrix::from_columns({{1, 0}, {0, 1}, {-1, 0}, {1, -1}}));
    std::mt19937 rng(20240917);
    for (const auto& m : sample_enumerated(simplex(3), 2, 5, rng)) suite.push_back(m);
    for (const auto& m : sample_enumerated(cube(3), 1, 5, rng)) suite.push_back(m);

    Outcome o;
    size_t compared = 0;
    for (const auto& m : suite) {
      std::vector<std::pair<QuasitoricManifold, Twist>> cases = {{m, Twist{}}, {m, signature_twist()}};
      Twist lines;
      IntVector first(m.facet_count(), 0), second(m.facet_count(), 0);
      first[0] = 1;
      second[m.facet_count() - 1] = 2;
      lines.bundles = {{first}, {second}};
      cases.emplace_back(m, lines);
      if (is_spin(m)) {
        const auto spin = m.with_spinc(spin_gamma(m));
        cases.emplace_back(spin, witten_twist());
        cases.emplace_back(spin, elliptic_twist());
      }
      for (const auto& [target, twist] : cases) {
        const int order = 4;
        const auto a = twisted_index(target, twist, order, Engine::localization);
        const auto b = twisted_index(target, twist, order, Engine::cohomological);
        ++compared;
        if (a != b) {
          o.ok = false;
          o.detail += "disagreement on an instance of dimension " + std::to_string(target.dimension()) + " ";
        }
      }
    }
    o.ok = o.ok && suite.size() >= 20;
    o.detail += std::to_string(suite.size()) + " manifolds, " + std::to_string(compared) + " comparisons";
    return o;
  });

  criterion(4, "negative index I forces a vanishing equivariant index to q^3", 30.0, [] {
    Outcome o;
    const std::vector<std::pair<QuasitoricManifold, IntVector>> suite = {
        {two_sphere(), {1}}, {sphere_power(1), {1}}, {sphere_power(2), {1, 1}}, {sphere_power(3), {1, 1, 1}}};
    for (const auto& [m, xi] : suite) {
      const auto v = vanishing_check(m, xi, 3);
      o.ok = o.ok && v.applies && v.vanishes;
      o.detail += "I=" + std::to_string(v.index_i) + (v.vanishes ? " zero " : " NONZERO ");
    }
    return o;
  });

  criterion(5, "Witten genus of (S^2)^n vanishes to q^3, n = 1..3", 30.0, [] {
    Outcome o;
    for (int n = 1; n <= 3; ++n) {
      const auto m = sphere_power(n);
      o.ok = o.ok && all_zero(witten_genus(m, 3)) && all_zero(witten_genus(m, 3, Engine::cohomological));
    }
    return o;
  });

  criterion(6, "circle search returns primitive kernel vectors on 100 random matrices", 1.0, [] {
    Outcome o;
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> entry(-6, 6), den(1, 5), rank_t(2, 6);
    for (int trial = 0; trial < 100; ++trial) {
      const int r = rank_t(rng);
      const int b2 = std::uniform_int_distribution<int>(0, r - 1)(rng);
      EquivariantDegree4Class a{Matrix(r, r), Matrix(r, b2), true};
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < b2; ++j) a.a22(i, j) = Rational(entry(rng), den(rng));
      const auto xi = find_circle(a);
      BigInt g = 0;
      for (long x : xi) g = gcd(g, BigInt(x));
      std::vector<Rational> x(xi.begin(), xi.end());
      const auto product = a.a22.transposed() * x;
      const bool zero = std::all_of(product.begin(), product.end(), [](const Rational& c) { return c.is_zero(); });
      o.ok = o.ok && g == 1 && zero;
    }
    return o;
  });

  criterion(7, "Euler characteristic of CP^n, signature of CP^2, A-hat of spin CP^3", 30.0, [] {
    Outcome o;
    for (int n = 1; n <= 4; ++n) {
      const auto m = complex_projective_space(n);
      o.ok = o.ok && m.polytope().vertex_count() == static_cast<size_t>(n + 1) &&
             euler_characteristic(m) == Rational(static_cast<long>(n + 1));
    }
    const auto cp2 = complex_projective_space(2);
    const auto cp3 = complex_projective_space(3);
    const Rational sig = signature(cp2);
    const Rational ahat = witten_genus(cp3, 0)[0];
    o.ok = o.ok && sig == Rational(1L) && signature(cp2, Engine::cohomological) == Rational(1L) && ahat.is_zero() &&
           a_hat_genus(cp3, Engine::cohomological).is_zero();
    o.detail = "signature=" + sig.str() + " A-hat=" + ahat.str();
    return o;
  });

  criterion(8, "census over connected sums of 3-simplices keeps 0 < beta_i <= 4", 300.0, [] {
    Outcome o;
    for (int k = 1; k <= 2; ++k)
      for (int bound = 1; bound <= 2; ++bound) {
        const auto c = finiteness_census(3, k, bound, 4);
        o.ok = o.ok && c.bounds_hold() && c.matched > 0;
        o.detail += "k=" + std::to_string(k) + " b=" + std::to_string(bound) + ": " + std::to_string(c.matched) +
                    "/" + std::to_string(c.enumerated) + " ";
      }
    return o;
  });

  criterion(9, "product formula on S^2 x CP^1 with a line bundle, to q^3", 30.0, [] {
    Outcome o;
    const auto s2 = two_sphere();
    for (const auto& m : {s2, s2.with_spinc(spin_gamma(s2))})
      for (auto engine : {Engine::localization, Engine::cohomological})
        o.ok = o.ok && check_product_formula(m, complex_projective_space(1), {{1, 1}}, 3, engine).holds();
    return o;
  });

  return failures == 0 ? 0 : 1;
}
