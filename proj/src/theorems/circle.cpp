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

#include "theorems/circle.hpp"

#include <map>
#include <optional>

#include "cohomology/face_ring.hpp"
#include "error.hpp"

namespace qtg {

EquivariantDegree4Class degree4_class(const QuasitoricManifold& m, const BundleSpec& bundles) {
  const int n = m.dimension();
  const int facets = m.facet_count();
  check_shapes(bundles, facets);
  const auto& lam = m.lambda();
  const auto& poly = m.polytope();

  // Degree-4 face monomials V_a V_b, a <= b.
  std::map<std::pair<int, int>, size_t> pair_index;
  for (int a = 0; a < facets; ++a)
    for (int b = a; b < facets; ++b)
      if (a == b || poly.is_face({a, b})) pair_index.emplace(std::make_pair(a, b), pair_index.size());
  auto slot = [&](int a, int b) -> std::optional<size_t> {
    auto it = pair_index.find({std::min(a, b), std::max(a, b)});
    if (it == pair_index.end()) return std::nullopt;
    return it->second;
  };

  std::vector<Rational> target(pair_index.size());
  auto add_square = [&](const std::vector<Rational>& lin) {
    for (int a = 0; a < facets; ++a)
      for (int b = 0; b < facets; ++b)
        if (auto s = slot(a, b)) target[*s] += lin[a] * lin[b];
  };
  const FixedPointDatum base = fixed_points(m).front();
  auto add_lines = [&](const std::vector<IntVector>& lines) {
    for (const auto& c : lines) {
      IntVector kappa(n, 0);
      for (int j = 0; j < facets; ++j) {
        const IntVector w = base.facet_weight(j);
        for (int i = 0; i < n; ++i) kappa[i] += c[j] * w[i];
      }
      std::vector<Rational> lin(facets);
      for (int j = 0; j < facets; ++j) {
        long v = c[j];
        for (int i = 0; i < n; ++i) v -= kappa[i] * lam(i, j);
        lin[j] = v;
      }
      add_square(lin);
    }
  };
  add_lines(bundles.V);
  add_lines(bundles.W);
  for (int j = 0; j < facets; ++j) target[*slot(j, j)] -= 1;

  // Unknowns: y_{ik} (Y_i = sum_k y_ik V_k), then q_{ab} for a <= b.
  const size_t ny = static_cast<size_t>(n) * facets;
  std::vector<std::pair<int, int>> qpairs;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) qpairs.emplace_back(a, b);
  Matrix sys(pair_index.size(), ny + qpairs.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < facets; ++j) {
      if (lam(i, j) == 0) continue;
      for (int k = 0; k < facets; ++k)
        if (auto s = slot(j, k)) sys(*s, static_cast<size_t>(i) * facets + k) += lam(i, j);
    }
  for (size_t q = 0; q < qpairs.size(); ++q) {
    const auto [a, b] = qpairs[q];
    for (int j = 0; j < facets; ++j)
      for (int k = 0; k < facets; ++k)
        if (auto s = slot(j, k)) sys(*s, ny + q) += Rational(lam(a, j) * lam(b, k));
  }

  const auto ring = build_face_ring(m);
  const size_t b2 = ring->dimension(1);
  EquivariantDegree4Class out{Matrix(n, n), Matrix(n, b2), true};
  const auto sol = solve(sys, target);
  if (!sol) {
    out.a04_zero = false;
    return out;
  }
  for (int i = 0; i < n; ++i) {
    Polynomial y;
    for (int k = 0; k < facets; ++k) {
      const Rational& c = (*sol)[static_cast<size_t>(i) * facets + k];
      if (c.is_zero()) continue;
      Monomial mono(facets, 0);
      mono[k] = 1;
      y[mono] += c;
    }
    const auto coords = ring->normal_form(y, 1);
    for (size_t c = 0; c < b2; ++c) out.a22(i, c) = coords[c];
  }
  for (size_t q = 0; q < qpairs.size(); ++q) {
    const auto [a, b] = qpairs[q];
    const Rational& c = (*sol)[ny + q];
    if (a == b) {
      out.a40(a, a) = c;
    } else {
      out.a40(a, b) = c / Rational(2);
      out.a40(b, a) = c / Rational(2);
    }
  }
  return out;
}

IntVector find_circle(const EquivariantDegree4Class& a) {
  require(a.a40.rows() == a.a40.cols() && a.a40 == a.a40.transposed(), ErrorKind::argument,
          "a40 must be a symmetric square matrix");
  require(a.a22.rows() >= 1, ErrorKind::argument, "a22 needs one row per torus coordinate");
  require(a.a04_zero, ErrorKind::hypothesis, "the H^4(M) component of the class is nonzero");
  const auto kernel = kernel_basis(a.a22.transposed());
  const std::string shape =
      "rank T = " + std::to_string(a.a22.rows()) + " is not larger than b2 = " + std::to_string(a.a22.cols());
  if (a.a22.rows() <= a.a22.cols()) {
    if (kernel.empty()) fail(ErrorKind::hypothesis, shape + " and a22^T has trivial kernel");
    fail(ErrorKind::hypothesis, shape + "; a kernel vector exists, but the rank hypothesis is unmet");
  }
  require(!kernel.empty(), ErrorKind::internal, "a wide matrix has trivial kernel");
  const auto big = primitive_integer_vector(kernel.front());
  IntVector xi;
  for (const auto& b : big) {
    require(b.fits_slong_p(), ErrorKind::argument, "circle vector entry out of range");
    xi.push_back(b.get_si());
  }
  return xi;
}

CircleRestriction restrict_to_circle(const EquivariantDegree4Class& a, const IntVector& xi) {
  require(xi.size() == a.a22.rows() && xi.size() == a.a40.rows(), ErrorKind::argument,
          "circle vector length must equal the torus rank");
  std::vector<Rational> x(xi.begin(), xi.end());
  CircleRestriction out;
  const auto ax = a.a40 * x;
  for (size_t i = 0; i < x.size(); ++i) out.pure += x[i] * ax[i];
  out.mixed = a.a22.transposed() * x;
  return out;
}

}  // namespace qtg
