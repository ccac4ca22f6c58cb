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

#include "exactalg/rational.hpp"

#include "error.hpp"

namespace qtg {

Rational::Rational(const BigInt& num, const BigInt& den) {
  require(den != 0, ErrorKind::argument, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s, 10));
    return Rational(BigInt(s.substr(0, slash), 10), BigInt(s.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::parse, "not a rational number: '" + s + "'");
  }
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

Rational Rational::inverse() const {
  require(!is_zero(), ErrorKind::not_invertible, "division by zero");
  Rational r;
  r.v_ = 1 / v_;
  return r;
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Rational base = *this;
  Rational out(1L);
  while (exponent > 0) {
    if (exponent & 1) out *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return out;
}

long Rational::to_long() const {
  require(is_integer(), ErrorKind::argument, "rational " + str() + " is not an integer");
  const mpz_class& n = v_.get_num();
  require(n.fits_slong_p(), ErrorKind::argument, "integer " + str() + " out of range");
  return n.get_si();
}

std::string Rational::str() const { return v_.get_str(10); }

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  require(!o.is_zero(), ErrorKind::not_invertible, "division by zero");
  v_ /= o.v_;
  return *this;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool exact_root(const BigInt& value, unsigned n, BigInt& root) {
  BigInt a = ::abs(value);
  int exact = mpz_root(root.get_mpz_t(), a.get_mpz_t(), n);
  return exact != 0;
}

}  // namespace qtg
