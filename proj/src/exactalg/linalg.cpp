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

#include "exactalg/linalg.hpp"

#include <algorithm>
#include <utility>

#include "error.hpp"

namespace qtg {

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = Rational(1L);
  return m;
}

Matrix Matrix::from_integers(const std::vector<std::vector<long>>& rows) {
  const size_t r = rows.size();
  const size_t c = r ? rows[0].size() : 0;
  Matrix m(r, c);
  for (size_t i = 0; i < r; ++i) {
    require(rows[i].size() == c, ErrorKind::argument, "ragged integer matrix");
    for (size_t j = 0; j < c; ++j) m(i, j) = Rational(rows[i][j]);
  }
  return m;
}

std::vector<Rational> Matrix::row(size_t r) const {
  return {data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_)};
}

std::vector<Rational> Matrix::column(size_t c) const {
  std::vector<Rational> out(rows_);
  for (size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols_ == b.rows_, ErrorKind::argument, "matrix shapes do not match");
  Matrix out(a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

std::vector<Rational> operator*(const Matrix& a, const std::vector<Rational>& v) {
  require(a.cols_ == v.size(), ErrorKind::argument, "matrix/vector shapes do not match");
  std::vector<Rational> out(a.rows_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
  return out;
}

std::vector<size_t> rref(Matrix& m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    const Rational inv = m(row, col).inverse();
    for (size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational f = m(r, col);
      for (size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

size_t rank(Matrix m) { return rref(m).size(); }

std::vector<std::vector<Rational>> kernel_basis(const Matrix& m) {
  Matrix r = m;
  const auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = Rational(1L);
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(const Matrix& m, const std::vector<Rational>& b) {
  require(b.size() == m.rows(), ErrorKind::argument, "solve: shape mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (size_t r = 0; r < m.rows(); ++r) {
    for (size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<Rational> x(m.cols());
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  require(m.rows() == m.cols(), ErrorKind::argument, "inverse of a non-square matrix");
  const size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Rational(1L);
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix out(n, n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  return out;
}

Rational determinant(Matrix m) {
  require(m.rows() == m.cols(), ErrorKind::argument, "determinant of a non-square matrix");
  const size_t n = m.rows();
  Rational det(1L);
  for (size_t col = 0; col < n; ++col) {
    size_t sel = col;
    while (sel < n && m(sel, col).is_zero()) ++sel;
    if (sel == n) return Rational();
    if (sel != col) {
      for (size_t c = 0; c < n; ++c) std::swap(m(sel, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    const Rational inv = m(col, col).inverse();
    for (size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const Rational f = m(r, col) * inv;
      for (size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

BigInt integer_determinant(const std::vector<std::vector<long>>& rows) {
  const size_t n = rows.size();
  if (n == 0) return BigInt(1);
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (size_t i = 0; i < n; ++i) {
    require(rows[i].size() == n, ErrorKind::argument, "determinant of a non-square matrix");
    for (size_t j = 0; j < n; ++j) a[i][j] = rows[i][j];
  }
  // Bareiss.
  int sign = 1;
  BigInt prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t sel = k + 1;
      while (sel < n && a[sel][k] == 0) ++sel;
      if (sel == n) return BigInt(0);
      std::swap(a[sel], a[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        BigInt num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<BigInt> primitive_integer_vector(const std::vector<Rational>& v) {
  BigInt den = 1;
  for (const auto& x : v) den = lcm(den, x.denominator());
  std::vector<BigInt> out;
  out.reserve(v.size());
  BigInt content = 0;
  for (const auto& x : v) {
    BigInt scaled = x.numerator() * (den / x.denominator());
    content = gcd(content, scaled);
    out.push_back(std::move(scaled));
  }
  require(content != 0, ErrorKind::argument, "zero vector has no primitive form");
  int lead = 0;
  for (const auto& x : out)
    if (x != 0) {
      lead = sgn(x);
      break;
    }
  for (auto& x : out) {
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
    if (lead < 0) x = -x;
  }
  return out;
}

std::optional<std::vector<int>> solve_mod2(std::vector<std::vector<int>> a, std::vector<int> b) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  for (auto& r : a)
    for (auto& x : r) x &= 1;
  for (auto& x : b) x &= 1;
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t sel = row;
    while (sel < rows && a[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[row]);
    std::swap(b[sel], b[row]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      for (size_t c = 0; c < cols; ++c) a[r][c] ^= a[row][c];
      b[r] ^= b[row];
    }
    pivots.push_back(col);
    ++row;
  }
  for (size_t r = row; r < rows; ++r)
    if (b[r]) return std::nullopt;
  std::vector<int> x(cols, 0);
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = b[i];
  return x;
}

}  // namespace qtg

namespace qtg {

std::vector<Rational> characteristic_polynomial(const Matrix& a) {
  require(a.rows() == a.cols(), ErrorKind::argument, "characteristic polynomial of a non-square matrix");
  const size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = Rational(1L);
  Matrix mk(n, n);
  for (size_t k = 1; k <= n; ++k) {
    Matrix next = a * mk;
    for (size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    const Matrix am = a * mk;
    Rational trace;
    for (size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / Rational(static_cast<long>(k));
  }
  return c;
}

namespace {

std::optional<std::vector<BigInt>> positive_divisors(BigInt value) {
  value = abs(value);
  if (value == 0) return std::nullopt;
  std::vector<std::pair<BigInt, int>> factors;
  constexpr unsigned long kTrialLimit = 1000000;
  for (unsigned long p = 2; p <= kTrialLimit && BigInt(p) * p <= value; ++p) {
    int e = 0;
    while (mpz_divisible_ui_p(value.get_mpz_t(), p)) {
      value /= p;
      ++e;
    }
    if (e) factors.emplace_back(BigInt(p), e);
  }
  if (value > 1) {
    if (value > BigInt(kTrialLimit) * kTrialLimit) return std::nullopt;
    factors.emplace_back(value, 1);
  }
  std::vector<BigInt> divisors{1};
  for (const auto& [p, e] : factors) {
    const size_t count = divisors.size();
    BigInt power = 1;
    for (int i = 1; i <= e; ++i) {
      power *= p;
      for (size_t j = 0; j < count; ++j) divisors.push_back(divisors[j] * power);
    }
  }
  return divisors;
}

}  // namespace

std::optional<std::vector<Rational>> rational_roots(const std::vector<Rational>& coeffs) {
  BigInt den = 1;
  for (const auto& c : coeffs) den = lcm(den, c.denominator());
  std::vector<BigInt> ints;
  for (const auto& c : coeffs) ints.push_back(c.numerator() * (den / c.denominator()));
  while (!ints.empty() && ints.back() == 0) ints.pop_back();
  require(!ints.empty(), ErrorKind::argument, "roots of the zero polynomial");

  std::vector<Rational> roots;
  size_t low = 0;
  while (ints[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0L);
  if (low + 1 == ints.size()) return roots;

  const auto ps = positive_divisors(ints[low]);
  const auto qs = positive_divisors(ints.back());
  if (!ps || !qs) return std::nullopt;
  for (const auto& p : *ps)
    for (const auto& q : *qs)
      for (int s : {-1, 1}) {
        const Rational x(BigInt(s * p), q);
        Rational value;
        Rational power(1L);
        for (const auto& c : coeffs) {
          value += c * power;
          power *= x;
        }
        if (value.is_zero()) roots.push_back(x);
      }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace qtg
