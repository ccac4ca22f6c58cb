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

#pragma once

#include <map>
#include <string>

#include "exactalg/rational.hpp"

namespace qtg {

/// Laurent polynomial in a formal circle character t whose exponents may be
/// half-integers. Exponents are keyed as doubled integers, so key 1 is t^(1/2).
/// Zero coefficients are never stored.
class HalfLaurent {
 public:
  using Terms = std::map<long, Rational>;

  HalfLaurent() = default;
  HalfLaurent(const Rational& constant);  // NOLINT
  HalfLaurent(long constant) : HalfLaurent(Rational(constant)) {}  // NOLINT

  /// coeff * t^(doubled_exponent / 2)
  static HalfLaurent monomial(const Rational& coeff, long doubled_exponent);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  Rational coefficient(long doubled_exponent) const;
  long min_doubled_exponent() const;
  long max_doubled_exponent() const;

  /// Evaluates at t = root_t^2, i.e. the argument is the value of t^(1/2).
  Rational evaluate_root(const Rational& root_t) const;
  /// Character dimension: the value at t = 1.
  Rational at_one() const;

  /// Inverse of a nonzero monomial; throws not_invertible otherwise.
  HalfLaurent inverse() const;

  HalfLaurent operator-() const;
  HalfLaurent& operator+=(const HalfLaurent& o);
  HalfLaurent& operator-=(const HalfLaurent& o);
  HalfLaurent& operator*=(const HalfLaurent& o);
  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
  friend HalfLaurent operator*(HalfLaurent a, const HalfLaurent& b) { return a *= b; }
  friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) { return a.terms_ == b.terms_; }

  /// e.g. "3 + t^(1/2) - 2*t^-1"; "0" for the zero polynomial.
  std::string str(const std::string& var = "t") const;

 private:
  void add_term(long key, const Rational& c);
  Terms terms_;
};

}  // namespace qtg
