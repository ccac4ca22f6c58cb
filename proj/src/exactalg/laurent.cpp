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

#include "exactalg/laurent.hpp"

#include "error.hpp"

namespace qtg {

HalfLaurent::HalfLaurent(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(0, constant);
}

HalfLaurent HalfLaurent::monomial(const Rational& coeff, long doubled_exponent) {
  HalfLaurent out;
  out.add_term(doubled_exponent, coeff);
  return out;
}

Rational HalfLaurent::coefficient(long doubled_exponent) const {
  auto it = terms_.find(doubled_exponent);
  return it == terms_.end() ? Rational() : it->second;
}

long HalfLaurent::min_doubled_exponent() const {
  require(!is_zero(), ErrorKind::argument, "zero Laurent polynomial has no exponents");
  return terms_.begin()->first;
}

long HalfLaurent::max_doubled_exponent() const {
  require(!is_zero(), ErrorKind::argument, "zero Laurent polynomial has no exponents");
  return terms_.rbegin()->first;
}

Rational HalfLaurent::evaluate_root(const Rational& root_t) const {
  Rational sum;
  for (const auto& [key, c] : terms_) sum += c * root_t.pow(key);
  return sum;
}

Rational HalfLaurent::at_one() const {
  Rational sum;
  for (const auto& [key, c] : terms_) sum += c;
  return sum;
}

HalfLaurent HalfLaurent::inverse() const {
  require(is_monomial(), ErrorKind::not_invertible,
          "only nonzero monomials are invertible, got " + str());
  const auto& [key, c] = *terms_.begin();
  return monomial(c.inverse(), -key);
}

HalfLaurent HalfLaurent::operator-() const {
  HalfLaurent out = *this;
  for (auto& [key, c] : out.terms_) c = -c;
  return out;
}

void HalfLaurent::add_term(long key, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, c);
  return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, -c);
  return *this;
}

HalfLaurent& HalfLaurent::operator*=(const HalfLaurent& o) {
  HalfLaurent out;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) out.add_term(ka + kb, ca * cb);
  terms_ = std::move(out.terms_);
  return *this;
}

namespace {

std::string exponent_text(long key) {
  if (key % 2 == 0) return std::to_string(key / 2);
  return "(" + std::to_string(key) + "/2)";
}

}  // namespace

std::string HalfLaurent::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // Descending exponents read more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const long key = it->first;
    Rational c = it->second;
    const bool negative = c.sign() < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool unit = c == Rational(1L);
    if (key == 0) {
      out += c.str();
      continue;
    }
    if (!unit) out += c.str() + "*";
    out += var;
    if (key != 2) out += "^" + exponent_text(key);
  }
  return out;
}

}  // namespace qtg
