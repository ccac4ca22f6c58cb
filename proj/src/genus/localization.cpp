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

#include "genus/localization.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <thread>
#include <tuple>

#include "error.hpp"
#include "exactalg/interpolate.hpp"
#include "exactalg/linalg.hpp"

namespace qtg {

namespace {

long line_weight(const FixedPointDatum& fp, const IntVector& coeffs, const IntVector& xi) {
  require(coeffs.size() >= fp.vertex.size(), ErrorKind::argument, "bundle line shorter than the facet count");
  long w = 0;
  for (size_t k = 0; k < fp.vertex.size(); ++k) w += coeffs.at(fp.vertex[k]) * dot(fp.weights[k], xi);
  return w;
}

long abs_sum(const std::vector<long>& xs) {
  long s = 0;
  for (long x : xs) s += std::abs(x);
  return s;
}

long max_abs(const LocalWeights& lw) {
  long mu = 0;
  for (const auto* xs : {&lw.tangent, &lw.v, &lw.w})
    for (long x : *xs) mu = std::max(mu, std::abs(x));
  return mu;
}

// Window of t^(1/2)-exponents the fixed-point sum can occupy in q-degree k:
// the largest exponent at s -> infinity and the smallest at s -> 0.
std::pair<long, long> exponent_window(const LocalWeights& lw, int k) {
  long hi = lw.spinc - abs_sum(lw.tangent) + abs_sum(lw.w) + 2L * k * max_abs(lw);
  long lo = lw.spinc + abs_sum(lw.tangent) - abs_sum(lw.w) - 2L * k * max_abs(lw);
  for (long a : lw.v) {
    hi += std::max(0L, -2 * a);
    lo += std::min(0L, -2 * a);
  }
  return {lo, hi};
}

long parity(const LocalWeights& lw) {
  long p = lw.spinc;
  for (long w : lw.tangent) p += w;
  for (long b : lw.w) p += b;
  return ((p % 2) + 2) % 2;
}

}  // namespace

LocalWeights local_weights(const FixedPointDatum& fp, const IntVector& xi, const Twist& twist,
                           const IntVector& gamma) {
  LocalWeights lw;
  lw.sign = fp.sign;
  for (const auto& w : fp.weights) {
    const long tw = dot(w, xi);
    if (tw == 0)
      fail(ErrorKind::degenerate_circle, "circle is not generic: a tangent weight vanishes at fixed point " +
                                             vertex_string(fp.vertex));
    lw.tangent.push_back(tw);
  }
  if (twist.spinc_prefactor) lw.spinc = line_weight(fp, gamma, xi);
  for (const auto& l : twist.bundles.V) lw.v.push_back(line_weight(fp, l, xi));
  for (const auto& l : twist.bundles.W) lw.w.push_back(line_weight(fp, l, xi));
  if (twist.tangent_in_w) lw.w.insert(lw.w.end(), lw.tangent.begin(), lw.tangent.end());
  return lw;
}

RationalQSeries fixed_point_contribution(const LocalWeights& lw, const Rational& s, int q_order) {
  require(!s.is_zero() && s != Rational(1L) && s != Rational(-1L), ErrorKind::argument,
          "sample point must avoid 0 and +-1");
  const Rational one(1L);
  Rational pre(static_cast<long>(lw.sign));
  pre *= s.pow(lw.spinc);
  for (long w : lw.tangent) pre /= s.pow(w) - s.pow(-w);
  for (long a : lw.v) pre *= one - s.pow(-2 * a);
  for (long b : lw.w) pre *= s.pow(b) + s.pow(-b);

  RationalQSeries out = RationalQSeries::constant(q_order, pre);
  if (pre.is_zero()) return out;
  // Net power of (1 - q^k) is 2(#tangent - #V).
  const long net_minus = 2 * (static_cast<long>(lw.tangent.size()) - static_cast<long>(lw.v.size()));
  for (int k = 1; k <= q_order; ++k) {
    for (long i = 0; i < std::abs(net_minus); ++i) {
      if (net_minus > 0)
        out.mul_binomial(-one, k);
      else
        out.div_binomial(-one, k);
    }
    for (long w : lw.tangent) {
      out.div_binomial(-s.pow(2 * w), k);
      out.div_binomial(-s.pow(-2 * w), k);
    }
    for (long a : lw.v) {
      out.mul_binomial(-s.pow(2 * a), k);
      out.mul_binomial(-s.pow(-2 * a), k);
    }
    for (long b : lw.w) {
      out.mul_binomial(s.pow(2 * b), k);
      out.mul_binomial(s.pow(-2 * b), k);
      out.div_binomial(one, k);
      out.div_binomial(one, k);
    }
  }
  return out;
}

RationalQSeries fixed_point_contribution(const FixedPointDatum& fp, const IntVector& xi, const Twist& twist,
                                         const IntVector& gamma, const Rational& root, int q_order) {
  return fixed_point_contribution(local_weights(fp, xi, twist, gamma), root, q_order);
}

EquivariantIndex equivariant_index(const QuasitoricManifold& m, const IntVector& xi, const Twist& twist,
                                   int q_order, int threads) {
  require(q_order >= 0, ErrorKind::argument, "negative q-order");
  require(static_cast<int>(xi.size()) == m.dimension(), ErrorKind::argument,
          "circle needs " + std::to_string(m.dimension()) + " entries");
  require(std::any_of(xi.begin(), xi.end(), [](long x) { return x != 0; }), ErrorKind::degenerate_circle,
          "circle vector is zero");
  check_shapes(twist.bundles, m.facet_count());

  std::vector<LocalWeights> locals;
  for (const auto& fp : fixed_points(m)) locals.push_back(local_weights(fp, xi, twist, m.spinc_coefficients()));
  const long par = parity(locals.front());
  for (const auto& lw : locals)
    require(parity(lw) == par, ErrorKind::consistency,
            "spin^c weight parity differs between fixed points; the twisting data is not spin^c-compatible");

  std::vector<std::pair<long, long>> windows;
  size_t needed = 1;
  for (int k = 0; k <= q_order; ++k) {
    long lo = std::numeric_limits<long>::max(), hi = std::numeric_limits<long>::min();
    for (const auto& lw : locals) {
      const auto [l, h] = exponent_window(lw, k);
      lo = std::min(lo, l);
      hi = std::max(hi, h);
    }
    if (((lo - par) % 2 + 2) % 2) ++lo;
    if (((hi - par) % 2 + 2) % 2) --hi;
    windows.emplace_back(lo, hi);
    if (hi >= lo) needed = std::max(needed, static_cast<size_t>((hi - lo) / 2 + 1));
  }
  const auto roots = sample_points(needed + 3);

  std::vector<RationalQSeries> sums(roots.size(), RationalQSeries(q_order));
  auto work = [&](size_t i) {
    RationalQSeries acc(q_order);
    for (const auto& lw : locals) acc += fixed_point_contribution(lw, roots[i], q_order);
    sums[i] = std::move(acc);
  };
  if (threads <= 1) {
    for (size_t i = 0; i < roots.size(); ++i) work(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (size_t i = next++; i < roots.size(); i = next++) work(i);
      });
    for (auto& th : pool) th.join();
  }

  EquivariantIndex out{xi, LaurentQSeries(q_order)};
  for (int k = 0; k <= q_order; ++k) {
    const auto [lo, hi] = windows[k];
    if (hi < lo) {
      for (size_t i = 0; i < roots.size(); ++i)
        require(sums[i][k].is_zero(), ErrorKind::degree_bound,
                "q^" + std::to_string(k) + " coefficient should vanish but a sample is nonzero");
      continue;
    }
    std::vector<Sample> samples;
    for (size_t i = 0; i < roots.size(); ++i)
      samples.push_back({roots[i] * roots[i], sums[i][k] * roots[i].pow(-lo)});
    HalfLaurent poly;
    try {
      poly = laurent_interpolate(samples, 0, (hi - lo) / 2);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::consistency)
        fail(ErrorKind::degree_bound, "held-out samples disagree in q-degree " + std::to_string(k) + ": " + e.what());
      throw;
    }
    HalfLaurent shifted;
    for (const auto& [key, c] : poly.terms()) shifted += HalfLaurent::monomial(c, key + lo);
    out.series[k] = shifted;
  }
  return out;
}

namespace {

// Size of the exponent window at q-degree 0, a proxy for sampling cost.
long circle_cost(const std::vector<FixedPointDatum>& fps, const IntVector& xi) {
  long cost = 0;
  for (const auto& fp : fps) {
    long local = 0;
    for (const auto& w : fp.weights) {
      const long tw = dot(w, xi);
      if (tw == 0) return -1;
      local += std::abs(tw);
    }
    cost = std::max(cost, local);
  }
  return cost;
}

}  // namespace

std::vector<IntVector> generic_circles(const QuasitoricManifold& m, size_t count) {
  const int n = m.dimension();
  const auto fps = fixed_points(m);
  constexpr int kMaxRadius = 12;
  for (int radius = 1; radius <= kMaxRadius; ++radius) {
    // (cost, leading entry negative, vector): xi comes before -xi.
    std::vector<std::tuple<long, bool, IntVector>> found;
    IntVector xi(n, -radius);
    while (true) {
      long g = 0;
      for (long x : xi) g = std::gcd(g, std::abs(x));
      if (g == 1) {
        const long cost = circle_cost(fps, xi);
        const bool negative = *std::find_if(xi.begin(), xi.end(), [](long x) { return x != 0; }) < 0;
        if (cost >= 0) found.emplace_back(cost, negative, xi);
      }
      int i = n - 1;
      while (i >= 0 && xi[i] == radius) xi[i--] = -radius;
      if (i < 0) break;
      ++xi[i];
    }
    if (found.size() >= count) {
      std::sort(found.begin(), found.end());
      std::vector<IntVector> out;
      for (size_t i = 0; i < count; ++i) out.push_back(std::get<2>(found[i]));
      return out;
    }
  }
  fail(ErrorKind::degenerate_circle, "no generic circle found with entries up to " + std::to_string(kMaxRadius));
}

RationalQSeries index(const QuasitoricManifold& m, const Twist& twist, int q_order, int threads) {
  const auto circles = generic_circles(m, 2);
  const auto a = at_one(equivariant_index(m, circles[0], twist, q_order, threads).series);
  const auto b = at_one(equivariant_index(m, circles[1], twist, q_order, threads).series);
  require(a == b, ErrorKind::internal, "index depends on the chosen circle: " + to_string(a) + " vs " + to_string(b));
  return a;
}

Rational euler_characteristic(const QuasitoricManifold& m) {
  // Atiyah-Bott for the de Rham complex: sum_i (-1)^i tr(g | Lambda^i T*_C)
  // over det(1 - g^-1 | T_C), with characters t^w, t^-w per tangent weight.
  const auto xi = generic_circles(m, 1).front();
  const auto fps = fixed_points(m);
  std::vector<Sample> samples;
  for (const auto& s : sample_points(4)) {
    const Rational t = s * s;
    Rational sum;
    for (const auto& fp : fps) {
      std::vector<Rational> chars;
      for (const auto& w : fp.weights) {
        const long tw = dot(w, xi);
        chars.push_back(t.pow(tw));
        chars.push_back(t.pow(-tw));
      }
      std::vector<Rational> elementary{Rational(1L)};
      for (const auto& c : chars) {
        elementary.emplace_back();
        for (size_t i = elementary.size() - 1; i > 0; --i) elementary[i] += c * elementary[i - 1];
      }
      Rational num, den(1L);
      for (size_t i = 0; i < elementary.size(); ++i) num += (i % 2 ? -elementary[i] : elementary[i]);
      for (const auto& c : chars) den *= Rational(1L) - c.inverse();
      sum += num / den;
    }
    samples.push_back({t, sum});
  }
  return laurent_interpolate(samples, 0, 0).at_one();
}

}  // namespace qtg
