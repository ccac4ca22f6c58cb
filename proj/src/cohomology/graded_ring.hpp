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
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "exactalg/rational.hpp"

namespace qtg {

/// Exponent vector over the generators.
using Monomial = std::vector<int>;
using Polynomial = std::map<Monomial, Rational>;

int monomial_degree(const Monomial& m);

/// Commutative graded algebra over Q generated in degree 2, presented as
/// Q[x_1..x_g] / (killed monomials + polynomial relations), truncated above
/// the top degree. Degrees are counted in units of 2 throughout.
///
/// Normal forms are computed degree by degree: every surviving monomial of
/// degree d is a column, relation*monomial products are rows, and the
/// reduced row echelon form (columns in descending lex order) leaves the
/// non-pivot monomials as the basis.
class GradedRing {
 public:
  /// Must be closed under multiplication: if m is killed, so is m*x_i.
  using KilledPredicate = std::function<bool(const Monomial&)>;

  struct Normalization {
    Monomial monomial;  // a top-degree monomial
    Rational value;     // its integral
  };

  GradedRing(int generators, int top_degree, const KilledPredicate& killed, std::vector<Polynomial> relations,
             Normalization normalization);

  int generator_count() const { return g_; }
  int top_degree() const { return top_; }
  size_t dimension(int degree) const;
  const std::vector<Monomial>& basis(int degree) const;
  std::vector<size_t> betti_numbers() const;

  /// Total basis: all degrees concatenated, degree 0 first.
  size_t total_dimension() const { return total_; }
  size_t offset(int degree) const { return offsets_.at(degree); }

  /// Coordinates of a monomial (or homogeneous polynomial) on basis(degree).
  std::vector<Rational> normal_form(const Monomial& m) const;
  std::vector<Rational> normal_form(const Polynomial& p, int degree) const;

  /// Product of two total-basis vectors, truncated above the top degree.
  std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) const;

  /// Integral of a top-degree coordinate vector.
  Rational integrate_top(const std::vector<Rational>& coords) const;

 private:
  struct Degree {
    std::map<Monomial, size_t> column;            // surviving monomial -> column
    std::vector<std::vector<Rational>> column_nf;  // normal form per column
    std::vector<Monomial> basis;
  };
  void build_degree(int d, const KilledPredicate& killed);

  int g_, top_;
  std::vector<Polynomial> relations_;
  std::vector<Degree> degrees_;
  std::vector<size_t> offsets_;
  size_t total_ = 0;
  Rational top_scale_;
  // Products of total-basis elements as sparse (index, coefficient) lists.
  std::vector<std::vector<std::vector<std::pair<size_t, Rational>>>> table_;
};

/// Homogeneous element of a graded ring.
class CohomologyClass {
 public:
  CohomologyClass(std::shared_ptr<const GradedRing> ring, int degree, std::vector<Rational> coeffs);
  static CohomologyClass zero(std::shared_ptr<const GradedRing> ring, int degree);
  static CohomologyClass from_polynomial(std::shared_ptr<const GradedRing> ring, const Polynomial& p, int degree);
  static CohomologyClass generator(std::shared_ptr<const GradedRing> ring, int index);

  const std::shared_ptr<const GradedRing>& ring() const { return ring_; }
  int degree() const { return degree_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const;

  CohomologyClass& operator+=(const CohomologyClass& o);
  CohomologyClass& operator-=(const CohomologyClass& o);
  CohomologyClass operator-() const;
  friend CohomologyClass operator+(CohomologyClass a, const CohomologyClass& b) { return a += b; }
  friend CohomologyClass operator-(CohomologyClass a, const CohomologyClass& b) { return a -= b; }
  friend CohomologyClass operator*(const Rational& c, CohomologyClass a);
  friend CohomologyClass operator*(const CohomologyClass& a, const CohomologyClass& b);
  friend bool operator==(const CohomologyClass& a, const CohomologyClass& b);
  CohomologyClass pow(int k) const;

  /// Sum over basis monomials, e.g. "3*v3^2"; generators named prefix1..prefixg.
  std::string str(const std::string& prefix = "v") const;

 private:
  void same_ring(const CohomologyClass& o) const;
  std::shared_ptr<const GradedRing> ring_;
  int degree_;
  std::vector<Rational> coeffs_;
};

/// Pairing with the fundamental class; argument error unless degree is top.
Rational integrate(const CohomologyClass& c);

std::string monomial_string(const Monomial& m, const std::string& prefix = "v");

}  // namespace qtg
