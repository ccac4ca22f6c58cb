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

#include <functional>
#include <vector>

#include "polytope/polytope.hpp"

namespace qtg {

using IntVector = std::vector<long>;

/// Integer n x m matrix; column j belongs to facet j.
class CharacteristicMatrix {
 public:
  CharacteristicMatrix() = default;
  CharacteristicMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols, 0) {}
  static CharacteristicMatrix from_rows(const std::vector<IntVector>& rows);
  static CharacteristicMatrix from_columns(const std::vector<IntVector>& columns);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long operator()(int r, int c) const { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  long& operator()(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  IntVector column(int c) const;
  IntVector row(int r) const;
  std::vector<IntVector> row_list() const;

  /// The square minor on the given columns, as rows.
  std::vector<IntVector> minor(const Vertex& cols) const;

  friend bool operator==(const CharacteristicMatrix&, const CharacteristicMatrix&) = default;
  friend auto operator<=>(const CharacteristicMatrix&, const CharacteristicMatrix&) = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<long> entries_;
};

/// Vertices whose minor determinant is not +-1. Throws on shape mismatch.
std::vector<Vertex> validate(const CharacteristicMatrix& lambda, const SimplePolytope& p);

/// Polytope plus characteristic matrix plus the spin^c class sum gamma_i v_i.
class QuasitoricManifold {
 public:
  /// Throws ErrorKind::validation when lambda fails on some vertex, and
  /// ErrorKind::argument when gamma has the wrong length or an even entry.
  QuasitoricManifold(SimplePolytope polytope, CharacteristicMatrix lambda, IntVector gamma);
  /// gamma defaults to all ones.
  QuasitoricManifold(SimplePolytope polytope, CharacteristicMatrix lambda);

  const SimplePolytope& polytope() const { return polytope_; }
  const CharacteristicMatrix& lambda() const { return lambda_; }
  const IntVector& spinc_coefficients() const { return gamma_; }
  int dimension() const { return polytope_.dimension(); }
  int facet_count() const { return polytope_.facet_count(); }

  QuasitoricManifold with_spinc(IntVector gamma) const { return {polytope_, lambda_, std::move(gamma)}; }

 private:
  SimplePolytope polytope_;
  CharacteristicMatrix lambda_;
  IntVector gamma_;
};

/// Standard models.
QuasitoricManifold complex_projective_space(int n);
/// CP^1: the interval with columns (1),(-1).
QuasitoricManifold two_sphere();
/// (S^2)^n over the cube: e_i on facet i, -e_i on the opposite facet i+n.
QuasitoricManifold sphere_power(int n);
QuasitoricManifold product(const QuasitoricManifold& a, const QuasitoricManifold& b);

struct FixedPointDatum {
  Vertex vertex;                  // facets j_1 < ... < j_n
  std::vector<IntVector> weights; // weights[i] pairs to delta_ik with lambda column j_k
  long minor_determinant;         // det of the ordered column minor, +-1
  int orientation;                // combinatorial orientation of the vertex
  int sign;                       // minor_determinant * orientation

  /// Weight vector of the facet class v_j at this fixed point (zero if j is
  /// not a facet of the vertex).
  IntVector facet_weight(int facet) const;
};

std::vector<FixedPointDatum> fixed_points(const QuasitoricManifold& m);

long dot(const IntVector& a, const IntVector& b);

/// Backtracking search for characteristic matrices with entries in
/// [-bound, bound]. The columns on the least vertex are fixed to the identity.
/// The work splits into independent subtrees, one per candidate for the first
/// free column.
class CharacteristicEnumeration {
 public:
  CharacteristicEnumeration(const SimplePolytope& p, int entry_bound);

  size_t subtree_count() const { return first_choices_.size(); }
  void run_subtree(size_t index, const std::function<void(const CharacteristicMatrix&)>& emit) const;

  /// All results, sorted. threads <= 1 runs inline.
  std::vector<CharacteristicMatrix> collect(int threads = 1) const;

 private:
  void extend(CharacteristicMatrix& lam, size_t step,
              const std::function<void(const CharacteristicMatrix&)>& emit) const;
  bool vertices_ok(const CharacteristicMatrix& lam, size_t step) const;

  SimplePolytope polytope_;
  std::vector<int> free_facets_;
  std::vector<IntVector> candidates_;
  std::vector<size_t> first_choices_;
  std::vector<std::vector<size_t>> completed_at_;  // vertices whose last free facet is step
  CharacteristicMatrix base_;
  bool trivially_done_ = false;
};

std::vector<CharacteristicMatrix> enumerate_characteristic_matrices(const SimplePolytope& p, int entry_bound,
                                                                    int threads = 1);

}  // namespace qtg
