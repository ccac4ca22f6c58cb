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

#include "cohomology/graded_ring.hpp"

#include <numeric>

#include "error.hpp"
#include "exactalg/linalg.hpp"

namespace qtg {

int monomial_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

namespace {

// Surviving monomials of degree d in descending lex order.
void enumerate(int g, int d, const GradedRing::KilledPredicate& killed, Monomial& cur, int pos, int left,
               std::vector<Monomial>& out) {
  if (pos == g - 1) {
    cur[pos] = left;
    if (!killed(cur)) out.push_back(cur);
    cur[pos] = 0;
    return;
  }
  for (int e = left; e >= 0; --e) {
    cur[pos] = e;
    if (e > 0 && killed(cur)) continue;
    enumerate(g, d, killed, cur, pos + 1, left - e, out);
  }
  cur[pos] = 0;
}

Monomial add(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

}  // namespace

GradedRing::GradedRing(int generators, int top_degree, const KilledPredicate& killed,
                       std::vector<Polynomial> relations, Normalization normalization)
    : g_(generators), top_(top_degree), relations_(std::move(relations)) {
  require(g_ >= 1, ErrorKind::argument, "graded ring needs at least one generator");
  require(top_ >= 0, ErrorKind::argument, "negative top degree");
  for (const auto& r : relations_) {
    require(!r.empty(), ErrorKind::argument, "empty relation");
    const int d = monomial_degree(r.begin()->first);
    for (const auto& [m, c] : r) {
      require(static_cast<int>(m.size()) == g_, ErrorKind::argument, "relation has wrong number of variables");
      require(monomial_degree(m) == d && d >= 1, ErrorKind::argument, "relations must be homogeneous of positive degree");
    }
  }
  degrees_.resize(top_ + 1);
  for (int d = 0; d <= top_; ++d) build_degree(d, killed);

  offsets_.resize(top_ + 1);
  for (int d = 0; d <= top_; ++d) {
    offsets_[d] = total_;
    total_ += degrees_[d].basis.size();
  }
  require(dimension(top_) == 1, ErrorKind::internal,
          "top degree has dimension " + std::to_string(dimension(top_)) + ", expected 1");

  const auto nf = normal_form(normalization.monomial);
  require(monomial_degree(normalization.monomial) == top_, ErrorKind::argument,
          "normalizing monomial must have top degree");
  require(!nf[0].is_zero(), ErrorKind::internal, "normalizing monomial vanishes in the ring");
  top_scale_ = normalization.value / nf[0];

  table_.assign(total_, std::vector<std::vector<std::pair<size_t, Rational>>>(total_));
  for (int da = 0; da <= top_; ++da)
    for (int db = 0; da + db <= top_; ++db)
      for (size_t i = 0; i < degrees_[da].basis.size(); ++i)
        for (size_t j = 0; j < degrees_[db].basis.size(); ++j) {
          const auto prod = normal_form(add(degrees_[da].basis[i], degrees_[db].basis[j]));
          auto& entry = table_[offsets_[da] + i][offsets_[db] + j];
          for (size_t k = 0; k < prod.size(); ++k)
            if (!prod[k].is_zero()) entry.emplace_back(offsets_[da + db] + k, prod[k]);
        }
}

void GradedRing::build_degree(int d, const KilledPredicate& killed) {
  Degree& deg = degrees_[d];
  std::vector<Monomial> cols;
  Monomial cur(g_, 0);
  enumerate(g_, d, killed, cur, 0, d, cols);
  for (size_t c = 0; c < cols.size(); ++c) deg.column.emplace(cols[c], c);

  // Rows: relation * surviving monomial of complementary degree.
  std::vector<std::vector<Rational>> rows;
  for (const auto& rel : relations_) {
    const int e = monomial_degree(rel.begin()->first);
    if (e > d) continue;
    for (const auto& mono : degrees_[d - e].column) {
      std::vector<Rational> row(cols.size());
      bool nonzero = false;
      for (const auto& [m, c] : rel) {
        auto it = deg.column.find(add(m, mono.first));
        if (it == deg.column.end()) continue;
        row[it->second] += c;
        nonzero = true;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  Matrix mat(rows.size(), cols.size());
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < cols.size(); ++c) mat(r, c) = rows[r][c];
  const auto pivots = rref(mat);

  std::vector<long> pivot_row(cols.size(), -1);
  for (size_t r = 0; r < pivots.size(); ++r) pivot_row[pivots[r]] = static_cast<long>(r);
  std::vector<long> basis_index(cols.size(), -1);
  for (size_t c = 0; c < cols.size(); ++c)
    if (pivot_row[c] < 0) {
      basis_index[c] = static_cast<long>(deg.basis.size());
      deg.basis.push_back(cols[c]);
    }
  deg.column_nf.assign(cols.size(), std::vector<Rational>(deg.basis.size()));
  for (size_t c = 0; c < cols.size(); ++c) {
    if (pivot_row[c] < 0) {
      deg.column_nf[c][basis_index[c]] = Rational(1L);
      continue;
    }
    const size_t r = pivot_row[c];
    for (size_t c2 = 0; c2 < cols.size(); ++c2)
      if (basis_index[c2] >= 0 && !mat(r, c2).is_zero()) deg.column_nf[c][basis_index[c2]] = -mat(r, c2);
  }
}

size_t GradedRing::dimension(int degree) const {
  if (degree < 0 || degree > top_) return 0;
  return degrees_[degree].basis.size();
}

const std::vector<Monomial>& GradedRing::basis(int degree) const {
  require(degree >= 0 && degree <= top_, ErrorKind::argument, "degree out of range");
  return degrees_[degree].basis;
}

std::vector<size_t> GradedRing::betti_numbers() const {
  std::vector<size_t> out;
  for (int d = 0; d <= top_; ++d) out.push_back(dimension(d));
  return out;
}

std::vector<Rational> GradedRing::normal_form(const Monomial& m) const {
  require(static_cast<int>(m.size()) == g_, ErrorKind::argument, "monomial has wrong number of variables");
  const int d = monomial_degree(m);
  if (d > top_) return {};
  const auto& deg = degrees_[d];
  auto it = deg.column.find(m);
  if (it == deg.column.end()) return std::vector<Rational>(deg.basis.size());
  return deg.column_nf[it->second];
}

std::vector<Rational> GradedRing::normal_form(const Polynomial& p, int degree) const {
  std::vector<Rational> out(dimension(degree));
  for (const auto& [m, c] : p) {
    require(monomial_degree(m) == degree, ErrorKind::argument, "polynomial is not homogeneous of the given degree");
    const auto nf = normal_form(m);
    for (size_t i = 0; i < nf.size(); ++i) out[i] += c * nf[i];
  }
  return out;
}

std::vector<Rational> GradedRing::multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
  require(a.size() == total_ && b.size() == total_, ErrorKind::argument, "ring element has wrong size");
  std::vector<Rational> out(total_);
  for (size_t i = 0; i < total_; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < total_; ++j) {
      if (b[j].is_zero()) continue;
      const Rational c = a[i] * b[j];
      for (const auto& [k, v] : table_[i][j]) out[k] += c * v;
    }
  }
  return out;
}

Rational GradedRing::integrate_top(const std::vector<Rational>& coords) const {
  require(coords.size() == 1, ErrorKind::argument, "top-degree vector must have one coordinate");
  return coords[0] * top_scale_;
}

CohomologyClass::CohomologyClass(std::shared_ptr<const GradedRing> ring, int degree, std::vector<Rational> coeffs)
    : ring_(std::move(ring)), degree_(degree), coeffs_(std::move(coeffs)) {
  require(ring_ != nullptr, ErrorKind::argument, "class without a ring");
  require(degree_ >= 0, ErrorKind::argument, "negative degree");
  require(coeffs_.size() == ring_->dimension(degree_), ErrorKind::argument,
          "coefficient vector does not match the basis of degree " + std::to_string(degree_));
}

CohomologyClass CohomologyClass::zero(std::shared_ptr<const GradedRing> ring, int degree) {
  const size_t dim = ring->dimension(degree);
  return {std::move(ring), degree, std::vector<Rational>(dim)};
}

CohomologyClass CohomologyClass::from_polynomial(std::shared_ptr<const GradedRing> ring, const Polynomial& p,
                                                 int degree) {
  auto nf = ring->normal_form(p, degree);
  return {std::move(ring), degree, std::move(nf)};
}

CohomologyClass CohomologyClass::generator(std::shared_ptr<const GradedRing> ring, int index) {
  require(index >= 0 && index < ring->generator_count(), ErrorKind::argument, "generator index out of range");
  Monomial m(ring->generator_count(), 0);
  m[index] = 1;
  auto nf = ring->normal_form(m);
  return {std::move(ring), 1, std::move(nf)};
}

bool CohomologyClass::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

void CohomologyClass::same_ring(const CohomologyClass& o) const {
  require(ring_ == o.ring_, ErrorKind::argument, "classes live in different rings");
}

CohomologyClass& CohomologyClass::operator+=(const CohomologyClass& o) {
  same_ring(o);
  require(degree_ == o.degree_, ErrorKind::argument, "adding classes of different degree");
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CohomologyClass& CohomologyClass::operator-=(const CohomologyClass& o) {
  same_ring(o);
  require(degree_ == o.degree_, ErrorKind::argument, "subtracting classes of different degree");
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CohomologyClass CohomologyClass::operator-() const {
  CohomologyClass out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CohomologyClass operator*(const Rational& c, CohomologyClass a) {
  for (auto& x : a.coeffs_) x *= c;
  return a;
}

CohomologyClass operator*(const CohomologyClass& a, const CohomologyClass& b) {
  a.same_ring(b);
  const auto& ring = *a.ring_;
  const int d = a.degree_ + b.degree_;
  CohomologyClass out = CohomologyClass::zero(a.ring_, d);
  if (d > ring.top_degree()) return out;
  const auto& ba = ring.basis(a.degree_);
  const auto& bb = ring.basis(b.degree_);
  for (size_t i = 0; i < ba.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < bb.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      Monomial m = ba[i];
      for (size_t k = 0; k < m.size(); ++k) m[k] += bb[j][k];
      const auto nf = ring.normal_form(m);
      const Rational c = a.coeffs_[i] * b.coeffs_[j];
      for (size_t k = 0; k < nf.size(); ++k) out.coeffs_[k] += c * nf[k];
    }
  }
  return out;
}

bool operator==(const CohomologyClass& a, const CohomologyClass& b) {
  return a.ring_ == b.ring_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
}

CohomologyClass CohomologyClass::pow(int k) const {
  require(k >= 0, ErrorKind::argument, "negative power of a class");
  CohomologyClass out = CohomologyClass::from_polynomial(ring_, {{Monomial(ring_->generator_count(), 0), 1L}}, 0);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

std::string monomial_string(const Monomial& m, const std::string& prefix) {
  std::string out;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += prefix + std::to_string(i + 1);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string CohomologyClass::str(const std::string& prefix) const {
  if (degree_ > ring_->top_degree()) return "0";
  const auto& basis = ring_->basis(degree_);
  std::string out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    Rational c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (negative) c = -c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const std::string mono = monomial_string(basis[i], prefix);
    if (mono == "1")
      out += c.str();
    else
      out += (c == Rational(1L) ? "" : c.str() + "*") + mono;
  }
  return out.empty() ? "0" : out;
}

Rational integrate(const CohomologyClass& c) {
  require(c.degree() == c.ring()->top_degree(), ErrorKind::argument,
          "integration needs a class of top degree " + std::to_string(2 * c.ring()->top_degree()) + ", got " +
              std::to_string(2 * c.degree()));
  return c.ring()->integrate_top(c.coefficients());
}

}  // namespace qtg
