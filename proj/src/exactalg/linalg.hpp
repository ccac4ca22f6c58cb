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

#include <cstdint>
#include <optional>
#include <vector>

#include "exactalg/rational.hpp"

namespace qtg {

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(size_t n);
  static Matrix from_integers(const std::vector<std::vector<long>>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Rational& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> row(size_t r) const;
  std::vector<Rational> column(size_t c) const;
  Matrix transposed() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend std::vector<Rational> operator*(const Matrix& a, const std::vector<Rational>& v);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row in order.
std::vector<size_t> rref(Matrix& m);

size_t rank(Matrix m);

/// Basis of the right kernel {x : m x = 0}, one vector per free column in
/// increasing column order (free variable set to 1, the others to 0).
std::vector<std::vector<Rational>> kernel_basis(const Matrix& m);

/// Some solution x of m x = b, or nullopt if inconsistent.
std::optional<std::vector<Rational>> solve(const Matrix& m, const std::vector<Rational>& b);

std::optional<Matrix> inverse(const Matrix& m);
Rational determinant(Matrix m);

/// Determinant of a small integer matrix (fraction-free elimination).
BigInt integer_determinant(const std::vector<std::vector<long>>& m);

/// Clears denominators and divides by the content; the first nonzero entry is
/// made positive. Throws on the zero vector.
std::vector<BigInt> primitive_integer_vector(const std::vector<Rational>& v);

/// Solves A x = b over GF(2). A is rows x cols with entries reduced mod 2.
std::optional<std::vector<int>> solve_mod2(std::vector<std::vector<int>> a, std::vector<int> b);

}  // namespace qtg

namespace qtg {

/// Coefficients c_0..c_n of det(x I - m) (Faddeev-LeVerrier), c_n = 1.
std::vector<Rational> characteristic_polynomial(const Matrix& m);

/// Distinct rational roots of sum c_i x^i in increasing order, or nullopt if
/// the candidate search would need to factor an integer beyond the trial
/// division limit.
std::optional<std::vector<Rational>> rational_roots(const std::vector<Rational>& coeffs);

}  // namespace qtg
