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

#include "polytope/quasitoric.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "error.hpp"
#include "exactalg/linalg.hpp"

namespace qtg {

CharacteristicMatrix CharacteristicMatrix::from_rows(const std::vector<IntVector>& rows) {
  require(!rows.empty(), ErrorKind::argument, "characteristic matrix needs at least one row");
  CharacteristicMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows_; ++r) {
    require(static_cast<int>(rows[r].size()) == m.cols_, ErrorKind::argument, "ragged characteristic matrix");
    for (int c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

CharacteristicMatrix CharacteristicMatrix::from_columns(const std::vector<IntVector>& columns) {
  require(!columns.empty(), ErrorKind::argument, "characteristic matrix needs at least one column");
  CharacteristicMatrix m(static_cast<int>(columns[0].size()), static_cast<int>(columns.size()));
  for (int c = 0; c < m.cols_; ++c) {
    require(static_cast<int>(columns[c].size()) == m.rows_, ErrorKind::argument, "ragged characteristic matrix");
    for (int r = 0; r < m.rows_; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntVector CharacteristicMatrix::column(int c) const {
  IntVector out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntVector CharacteristicMatrix::row(int r) const {
  return {entries_.begin() + static_cast<long>(r) * cols_, entries_.begin() + static_cast<long>(r + 1) * cols_};
}

std::vector<IntVector> CharacteristicMatrix::row_list() const {
  std::vector<IntVector> out;
  for (int r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

std::vector<IntVector> CharacteristicMatrix::minor(const Vertex& cols) const {
  std::vector<IntVector> out(rows_, IntVector(cols.size()));
  for (int r = 0; r < rows_; ++r)
    for (size_t k = 0; k < cols.size(); ++k) out[r][k] = (*this)(r, cols[k]);
  return out;
}

std::vector<Vertex> validate(const CharacteristicMatrix& lambda, const SimplePolytope& p) {
  require(lambda.rows() == p.dimension() && lambda.cols() == p.facet_count(), ErrorKind::argument,
          "characteristic matrix must be " + std::to_string(p.dimension()) + "x" +
              std::to_string(p.facet_count()) + ", got " + std::to_string(lambda.rows()) + "x" +
              std::to_string(lambda.cols()));
  std::vector<Vertex> failing;
  for (const auto& v : p.vertices()) {
    const BigInt det = integer_determinant(lambda.minor(v));
    if (det != 1 && det != -1) failing.push_back(v);
  }
  return failing;
}

QuasitoricManifold::QuasitoricManifold(SimplePolytope polytope, CharacteristicMatrix lambda, IntVector gamma)
    : polytope_(std::move(polytope)), lambda_(std::move(lambda)), gamma_(std::move(gamma)) {
  const auto failing = validate(lambda_, polytope_);
  if (!failing.empty()) {
    std::string list;
    for (const auto& v : failing) list += (list.empty() ? "" : " ") + vertex_string(v);
    fail(ErrorKind::validation, "characteristic matrix is not unimodular at vertices " + list);
  }
  require(static_cast<int>(gamma_.size()) == polytope_.facet_count(), ErrorKind::argument,
          "spin^c vector needs one entry per facet");
  for (size_t i = 0; i < gamma_.size(); ++i)
    require(gamma_[i] % 2 != 0, ErrorKind::argument,
            "spin^c coefficient of facet " + std::to_string(i + 1) + " must be odd");
}

QuasitoricManifold::QuasitoricManifold(SimplePolytope polytope, CharacteristicMatrix lambda)
    : QuasitoricManifold(polytope, lambda, IntVector(polytope.facet_count(), 1)) {}

QuasitoricManifold complex_projective_space(int n) {
  std::vector<IntVector> cols;
  for (int i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    cols.push_back(e);
  }
  cols.push_back(IntVector(n, -1));
  return {simplex(n), CharacteristicMatrix::from_columns(cols)};
}

QuasitoricManifold two_sphere() { return complex_projective_space(1); }

QuasitoricManifold sphere_power(int n) {
  CharacteristicMatrix lam(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    lam(i, i) = 1;
    lam(i, i + n) = -1;
  }
  return {cube(n), lam};
}

QuasitoricManifold product(const QuasitoricManifold& a, const QuasitoricManifold& b) {
  const int na = a.dimension(), nb = b.dimension();
  const int ma = a.facet_count(), mb = b.facet_count();
  CharacteristicMatrix lam(na + nb, ma + mb);
  for (int r = 0; r < na; ++r)
    for (int c = 0; c < ma; ++c) lam(r, c) = a.lambda()(r, c);
  for (int r = 0; r < nb; ++r)
    for (int c = 0; c < mb; ++c) lam(na + r, ma + c) = b.lambda()(r, c);
  IntVector gamma = a.spinc_coefficients();
  gamma.insert(gamma.end(), b.spinc_coefficients().begin(), b.spinc_coefficients().end());
  return {product(a.polytope(), b.polytope()), lam, gamma};
}

long dot(const IntVector& a, const IntVector& b) {
  require(a.size() == b.size(), ErrorKind::argument, "dot product of vectors of different length");
  long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector FixedPointDatum::facet_weight(int facet) const {
  for (size_t k = 0; k < vertex.size(); ++k)
    if (vertex[k] == facet) return weights[k];
  return IntVector(weights.empty() ? 0 : weights[0].size(), 0);
}

std::vector<FixedPointDatum> fixed_points(const QuasitoricManifold& m) {
  const auto& p = m.polytope();
  const int n = p.dimension();
  std::vector<FixedPointDatum> out;
  out.reserve(p.vertex_count());
  for (size_t vi = 0; vi < p.vertex_count(); ++vi) {
    const Vertex& v = p.vertices()[vi];
    const auto minor = m.lambda().minor(v);
    const auto inv = inverse(Matrix::from_integers(minor));
    require(inv.has_value(), ErrorKind::internal, "singular minor at a validated vertex");
    FixedPointDatum d;
    d.vertex = v;
    // Rows of the inverse minor form the dual basis.
    for (int i = 0; i < n; ++i) {
      IntVector w(n);
      for (int j = 0; j < n; ++j) w[j] = (*inv)(i, j).to_long();
      d.weights.push_back(w);
    }
    d.minor_determinant = integer_determinant(minor).get_si();
    d.orientation = p.orientation()[vi];
    d.sign = static_cast<int>(d.minor_determinant) * d.orientation;
    out.push_back(std::move(d));
  }
  return out;
}

CharacteristicEnumeration::CharacteristicEnumeration(const SimplePolytope& p, int entry_bound) : polytope_(p) {
  require(entry_bound >= 0, ErrorKind::argument, "entry bound must be non-negative");
  const int n = p.dimension();
  const int m = p.facet_count();
  base_ = CharacteristicMatrix(n, m);
  const Vertex& gauge = p.vertices().front();
  std::vector<bool> fixed(m, false);
  for (int k = 0; k < n; ++k) {
    base_(k, gauge[k]) = 1;
    fixed[gauge[k]] = true;
  }
  for (int f = 0; f < m; ++f)
    if (!fixed[f]) free_facets_.push_back(f);

  // Candidate columns: nonzero vectors in [-b, b]^n, lexicographic order.
  if (entry_bound > 0) {
    IntVector c(n, -entry_bound);
    while (true) {
      if (std::any_of(c.begin(), c.end(), [](long x) { return x != 0; })) candidates_.push_back(c);
      int i = n - 1;
      while (i >= 0 && c[i] == entry_bound) c[i--] = -entry_bound;
      if (i < 0) break;
      ++c[i];
    }
  }

  std::vector<int> step_of(m, -1);
  for (size_t s = 0; s < free_facets_.size(); ++s) step_of[free_facets_[s]] = static_cast<int>(s);
  completed_at_.assign(free_facets_.size(), {});
  for (size_t vi = 0; vi < p.vertex_count(); ++vi) {
    int last = -1;
    for (int f : p.vertices()[vi]) last = std::max(last, step_of[f]);
    if (last >= 0) completed_at_[last].push_back(vi);
  }
  if (free_facets_.empty()) {
    trivially_done_ = true;
    first_choices_.push_back(0);
  } else {
    for (size_t i = 0; i < candidates_.size(); ++i) first_choices_.push_back(i);
  }
}

bool CharacteristicEnumeration::vertices_ok(const CharacteristicMatrix& lam, size_t step) const {
  for (size_t vi : completed_at_[step]) {
    const BigInt det = integer_determinant(lam.minor(polytope_.vertices()[vi]));
    if (det != 1 && det != -1) return false;
  }
  return true;
}

void CharacteristicEnumeration::extend(CharacteristicMatrix& lam, size_t step,
                                       const std::function<void(const CharacteristicMatrix&)>& emit) const {
  if (step == free_facets_.size()) {
    emit(lam);
    return;
  }
  const int f = free_facets_[step];
  for (const auto& c : candidates_) {
    for (int r = 0; r < lam.rows(); ++r) lam(r, f) = c[r];
    if (vertices_ok(lam, step)) extend(lam, step + 1, emit);
  }
  for (int r = 0; r < lam.rows(); ++r) lam(r, f) = 0;
}

void CharacteristicEnumeration::run_subtree(size_t index,
                                            const std::function<void(const CharacteristicMatrix&)>& emit) const {
  require(index < first_choices_.size(), ErrorKind::argument, "subtree index out of range");
  CharacteristicMatrix lam = base_;
  if (trivially_done_) {
    if (validate(lam, polytope_).empty()) emit(lam);
    return;
  }
  const int f = free_facets_[0];
  const auto& c = candidates_[first_choices_[index]];
  for (int r = 0; r < lam.rows(); ++r) lam(r, f) = c[r];
  if (vertices_ok(lam, 0)) extend(lam, 1, emit);
}

std::vector<CharacteristicMatrix> CharacteristicEnumeration::collect(int threads) const {
  std::vector<CharacteristicMatrix> out;
  if (threads <= 1) {
    for (size_t i = 0; i < subtree_count(); ++i)
      run_subtree(i, [&](const CharacteristicMatrix& m) { out.push_back(m); });
  } else {
    std::mutex mu;
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        std::vector<CharacteristicMatrix> local;
        for (size_t i = next++; i < subtree_count(); i = next++)
          run_subtree(i, [&](const CharacteristicMatrix& m) { local.push_back(m); });
        std::lock_guard lock(mu);
        out.insert(out.end(), local.begin(), local.end());
      });
    for (auto& th : pool) th.join();
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CharacteristicMatrix> enumerate_characteristic_matrices(const SimplePolytope& p, int entry_bound,
                                                                    int threads) {
  return CharacteristicEnumeration(p, entry_bound).collect(threads);
}

}  // namespace qtg
