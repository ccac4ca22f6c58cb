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

#include "exactalg/interpolate.hpp"

#include "error.hpp"

namespace qtg {

std::vector<Rational> sample_points(size_t count) {
  std::vector<Rational> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) out.emplace_back(static_cast<long>(i) + 2);
  return out;
}

std::vector<Rational> solve_vandermonde(std::span<const Rational> xs, std::span<const Rational> ys) {
  const size_t n = xs.size();
  require(ys.size() == n && n > 0, ErrorKind::argument, "vandermonde: bad sample count");
  // Divided differences, in place.
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (size_t level = 1; level < n; ++level) {
    for (size_t i = n - 1; i >= level; --i) {
      Rational gap = xs[i] - xs[i - level];
      require(!gap.is_zero(), ErrorKind::interpolation, "singular system: repeated sample point " + xs[i].str());
      dd[i] = (dd[i] - dd[i - 1]) / gap;
    }
  }
  // Expand Newton form into monomial coefficients (Horner on the nodes).
  std::vector<Rational> coeffs(n);
  coeffs[0] = dd[n - 1];
  size_t len = 1;
  for (size_t k = n - 1; k-- > 0;) {
    // coeffs <- coeffs * (x - xs[k]) + dd[k]
    std::vector<Rational> next(len + 1);
    for (size_t i = 0; i < len; ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= coeffs[i] * xs[k];
    }
    next[0] += dd[k];
    ++len;
    for (size_t i = 0; i < len; ++i) coeffs[i] = next[i];
  }
  return coeffs;
}

HalfLaurent laurent_interpolate(std::span<const Sample> samples, long min_exp, long max_exp) {
  require(max_exp >= min_exp, ErrorKind::argument, "empty exponent range");
  const size_t needed = static_cast<size_t>(max_exp - min_exp + 1);
  require(samples.size() >= needed, ErrorKind::argument,
          "need " + std::to_string(needed) + " samples, got " + std::to_string(samples.size()));
  for (const auto& s : samples) {
    require(!s.point.is_zero() && s.point != Rational(1L) && s.point != Rational(-1L),
            ErrorKind::argument, "sample point " + s.point.str() + " is not allowed");
  }
  std::vector<Rational> xs, ys;
  xs.reserve(needed);
  ys.reserve(needed);
  for (size_t i = 0; i < needed; ++i) {
    xs.push_back(samples[i].point);
    ys.push_back(samples[i].value * samples[i].point.pow(-min_exp));
  }
  std::vector<Rational> coeffs = solve_vandermonde(xs, ys);

  HalfLaurent out;
  for (size_t i = 0; i < coeffs.size(); ++i)
    out += HalfLaurent::monomial(coeffs[i], 2 * (min_exp + static_cast<long>(i)));

  for (size_t i = needed; i < samples.size(); ++i) {
    for (size_t j = 0; j < i; ++j)
      require(samples[j].point != samples[i].point, ErrorKind::interpolation,
              "singular system: repeated sample point " + samples[i].point.str());
    Rational value;
    Rational power = samples[i].point.pow(min_exp);
    for (const auto& c : coeffs) {
      value += c * power;
      power *= samples[i].point;
    }
    require(value == samples[i].value, ErrorKind::consistency,
            "held-out sample at t=" + samples[i].point.str() + " disagrees with the fitted Laurent polynomial");
  }
  return out;
}

}  // namespace qtg
