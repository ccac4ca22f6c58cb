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

#include <string>
#include <vector>

#include "error.hpp"
#include "exactalg/laurent.hpp"
#include "exactalg/rational.hpp"

namespace qtg {

namespace detail {
inline Rational unit_inverse(const Rational& c) {
  require(!c.is_zero(), ErrorKind::not_invertible, "series with zero constant term");
  return c.inverse();
}
inline HalfLaurent unit_inverse(const HalfLaurent& c) { return c.inverse(); }
}  // namespace detail

/// Power series in q truncated at a fixed order: coefficient k multiplies q^k
/// for k = 0..order. Arithmetic never looks past the truncation order.
template <class Coeff>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order = 0) : coeffs_(check_order(order) + 1) {}
  TruncatedSeries(int order, std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(check_order(order) + 1);
  }

  static TruncatedSeries one(int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = Coeff(1L);
    return s;
  }
  static TruncatedSeries constant(int order, const Coeff& c) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  const Coeff& operator[](int k) const { return coeffs_.at(k); }
  Coeff& operator[](int k) { return coeffs_.at(k); }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!(c == Coeff())) return false;
    return true;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    same_order(o);
    for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    same_order(o);
    for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  TruncatedSeries& scale(const Coeff& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    return multiply(a, b);
  }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// In-place multiplication by (1 + c q^step).
  void mul_binomial(const Coeff& c, int step) {
    for (int k = order(); k >= step; --k) coeffs_[k] += c * coeffs_[k - step];
  }
  /// In-place division by (1 + c q^step), step >= 1.
  void div_binomial(const Coeff& c, int step) {
    for (int k = step; k <= order(); ++k) coeffs_[k] -= c * coeffs_[k - step];
  }

 private:
  static int check_order(int order) {
    require(order >= 0, ErrorKind::argument, "negative truncation order");
    return order;
  }
  void same_order(const TruncatedSeries& o) const {
    require(order() == o.order(), ErrorKind::order_mismatch,
            "truncation orders differ: " + std::to_string(order()) + " vs " +
                std::to_string(o.order()));
  }

  std::vector<Coeff> coeffs_;

  template <class C>
  friend TruncatedSeries<C> multiply(const TruncatedSeries<C>&, const TruncatedSeries<C>&);
};

/// Cauchy product truncated at the common order.
template <class Coeff>
TruncatedSeries<Coeff> multiply(const TruncatedSeries<Coeff>& a, const TruncatedSeries<Coeff>& b) {
  a.same_order(b);
  const int n = a.order();
  TruncatedSeries<Coeff> out(n);
  for (int i = 0; i <= n; ++i) {
    if (a.coeffs_[i] == Coeff()) continue;
    for (int j = 0; i + j <= n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

/// Multiplicative inverse; the q^0 coefficient must be a unit.
template <class Coeff>
TruncatedSeries<Coeff> invert(const TruncatedSeries<Coeff>& a) {
  const int n = a.order();
  const Coeff lead_inv = detail::unit_inverse(a[0]);
  TruncatedSeries<Coeff> out(n);
  out[0] = lead_inv;
  for (int k = 1; k <= n; ++k) {
    Coeff acc;
    for (int j = 1; j <= k; ++j) acc += a[j] * out[k - j];
    out[k] = -(acc * lead_inv);
  }
  return out;
}

using RationalQSeries = TruncatedSeries<Rational>;
using LaurentQSeries = TruncatedSeries<HalfLaurent>;

inline RationalQSeries at_one(const LaurentQSeries& s) {
  RationalQSeries out(s.order());
  for (int k = 0; k <= s.order(); ++k) out[k] = s[k].at_one();
  return out;
}

std::string to_string(const RationalQSeries& s);
std::string to_string(const LaurentQSeries& s);

}  // namespace qtg
