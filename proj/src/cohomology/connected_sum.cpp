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

#include "cohomology/connected_sum.hpp"

#include <random>

#include "error.hpp"
#include "exactalg/linalg.hpp"

namespace qtg {

CharacteristicModel connected_sum_model(int n, const std::vector<int>& signs, const std::vector<IntVector>& roots,
                                        const IntVector& spinc) {
  const int k = static_cast<int>(signs.size());
  require(n >= 1 && k >= 1, ErrorKind::argument, "connected sum model needs n >= 1 and k >= 1");
  for (int s : signs) require(s == 1 || s == -1, ErrorKind::argument, "orientation signs must be +-1");
  auto killed = [](const Monomial& m) {
    int support = 0;
    for (int e : m) support += e > 0;
    return support > 1;
  };
  std::vector<Polynomial> relations;
  for (int j = 1; j < k; ++j) {
    Monomial a(k, 0), b(k, 0);
    a[0] = n;
    b[j] = n;
    relations.push_back({{a, Rational(1L)}, {b, Rational(static_cast<long>(-signs[0] * signs[j]))}});
  }
  Monomial top(k, 0);
  top[0] = n;
  CharacteristicModel model;
  model.ring = std::make_shared<const GradedRing>(k, n, killed, std::move(relations),
                                                  GradedRing::Normalization{top, Rational(signs[0])});
  model.dimension = n;
  for (int j = 0; j < k; ++j) model.generators.push_back(CohomologyClass::generator(model.ring, j));
  for (const auto& r : roots) model.tangent_roots.push_back(model.line_class(r));
  model.spinc = model.line_class(spinc);
  return model;
}

ConnectedSumStructure synthetic_connected_sum(int n, const std::vector<int>& signs, const std::vector<long>& beta) {
  require(signs.size() == beta.size(), ErrorKind::argument, "one beta per generator");
  const int k = static_cast<int>(signs.size());
  ConnectedSumStructure s;
  s.n = n;
  s.k = k;
  s.signs = signs;
  s.beta = beta;
  std::vector<IntVector> roots;
  IntVector spinc(k, 0);
  for (int j = 0; j < k; ++j) {
    require(beta[j] >= 0, ErrorKind::argument, "synthetic tangent multiplicities must be non-negative");
    IntVector e(k, 0);
    e[j] = 1;
    for (long c = 0; c < beta[j]; ++c) roots.push_back(e);
    s.w2.push_back(static_cast<int>(beta[j] % 2));
    spinc[j] = s.w2.back();
  }
  s.model = connected_sum_model(n, signs, roots, spinc);
  return s;
}

namespace {

CohomologyClass unit_class(const std::shared_ptr<const GradedRing>& ring, int degree, size_t index) {
  std::vector<Rational> c(ring->dimension(degree));
  c[index] = Rational(1L);
  return {ring, degree, std::move(c)};
}

CohomologyClass combine(const std::shared_ptr<const GradedRing>& ring, int degree, const std::vector<Rational>& c) {
  CohomologyClass out = CohomologyClass::zero(ring, degree);
  for (size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) out += c[i] * unit_class(ring, degree, i);
  return out;
}

// Columns are the lines spanned by v_1..v_k in the H^2 basis. All forms
// (a, b) -> <a b y, [M]> with y in H^(2n-4) are diagonal in the v basis, so
// the v_j are the eigenvectors of My^-1 Mz for generic y, z.
std::optional<Matrix> orthogonal_lines(const std::shared_ptr<const GradedRing>& ring, int n) {
  const size_t k = ring->dimension(1);
  const size_t dy = ring->dimension(n - 2);
  std::vector<CohomologyClass> e;
  for (size_t a = 0; a < k; ++a) e.push_back(unit_class(ring, 1, a));
  std::vector<std::vector<CohomologyClass>> prod;
  for (size_t a = 0; a < k; ++a) {
    prod.emplace_back();
    for (size_t b = 0; b < k; ++b) prod[a].push_back(e[a] * e[b]);
  }
  std::mt19937 rng(20240917);
  std::uniform_int_distribution<long> coeff(-4, 4);
  for (int attempt = 0; attempt < 24; ++attempt) {
    std::vector<Rational> ycoef(dy), zcoef(dy);
    for (auto& x : ycoef) x = Rational(coeff(rng));
    for (auto& x : zcoef) x = Rational(coeff(rng));
    const auto y = combine(ring, n - 2, ycoef);
    const auto z = combine(ring, n - 2, zcoef);
    Matrix my(k, k), mz(k, k);
    for (size_t a = 0; a < k; ++a)
      for (size_t b = 0; b < k; ++b) {
        my(a, b) = integrate(prod[a][b] * y);
        mz(a, b) = integrate(prod[a][b] * z);
      }
    const auto inv = inverse(my);
    if (!inv) continue;
    const Matrix t = *inv * mz;
    const auto roots = rational_roots(characteristic_polynomial(t));
    if (!roots || roots->size() != k) continue;
    Matrix lines(k, k);
    for (size_t j = 0; j < k; ++j) {
      Matrix shifted = t;
      for (size_t i = 0; i < k; ++i) shifted(i, i) -= (*roots)[j];
      const auto ker = kernel_basis(shifted);
      if (ker.size() != 1) return std::nullopt;
      for (size_t i = 0; i < k; ++i) lines(i, j) = ker[0][i];
    }
    return lines;
  }
  return std::nullopt;
}

BigInt minor_gcd(const std::vector<IntVector>& alpha, size_t k) {
  const size_t m = alpha.size();
  BigInt g = 0;
  std::vector<size_t> pick(k);
  for (size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    std::vector<std::vector<long>> minor;
    for (size_t r : pick) minor.push_back(alpha[r]);
    g = gcd(g, integer_determinant(minor));
    if (g == 1) return g;
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && pick[i] == m - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return g;
}

}  // namespace

ConnectedSumStructure connected_sum_structure(const QuasitoricManifold& m) {
  const int n = m.dimension();
  require(n >= 3, ErrorKind::shape,
          "connected-sum recognition needs n >= 3 (for n = 2 the products v_i v_j need not vanish)");
  const CharacteristicModel face = characteristic_model(m);
  const auto& ring = face.ring;
  const size_t k = ring->dimension(1);
  for (int d = 1; d < n; ++d)
    require(ring->dimension(d) == k, ErrorKind::shape,
            "Betti numbers " + std::to_string(ring->dimension(d)) + " in degree " + std::to_string(2 * d) +
                " differ from b2 = " + std::to_string(k));

  const auto lines = orthogonal_lines(ring, n);
  require(lines.has_value(), ErrorKind::shape, "H^2 has no basis of mutually annihilating classes");
  const auto pinv = inverse(*lines);
  require(pinv.has_value(), ErrorKind::internal, "eigenvectors are not a basis");

  // u_i = sum_j a_ij line_j; rescale each line so its column of a is primitive.
  const size_t facets = face.generators.size();
  std::vector<std::vector<Rational>> a;
  for (const auto& u : face.generators) a.push_back(*pinv * u.coefficients());
  std::vector<Rational> scale(k);
  ConnectedSumStructure s;
  s.n = n;
  s.k = static_cast<int>(k);
  s.alpha.assign(facets, IntVector(k));
  for (size_t j = 0; j < k; ++j) {
    std::vector<Rational> col(facets);
    for (size_t i = 0; i < facets; ++i) col[i] = a[i][j];
    const auto prim = primitive_integer_vector(col);
    for (size_t i = 0; i < facets; ++i) {
      require(prim[i].fits_slong_p(), ErrorKind::shape, "coefficient overflow");
      s.alpha[i][j] = prim[i].get_si();
      if (prim[i] != 0 && scale[j].is_zero()) scale[j] = col[i] / Rational(prim[i]);
    }
  }
  std::vector<CohomologyClass> v;
  for (size_t j = 0; j < k; ++j) {
    std::vector<Rational> coords(k);
    for (size_t i = 0; i < k; ++i) coords[i] = (*lines)(i, j) * scale[j];
    v.push_back(combine(ring, 1, coords));
  }

  require(minor_gcd(s.alpha, k) == 1, ErrorKind::shape, "the classes v_j do not span H^2(M;Z)");
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j)
      require((v[i] * v[j]).is_zero(), ErrorKind::shape, "v_i v_j does not vanish");
  for (int d = 1; d < n; ++d) {
    Matrix powers(k, k);
    for (size_t j = 0; j < k; ++j) {
      const auto c = v[j].pow(d).coefficients();
      for (size_t i = 0; i < k; ++i) powers(i, j) = c[i];
    }
    require(rank(powers) == k, ErrorKind::shape,
            "powers v_j^" + std::to_string(d) + " are not a basis of H^" + std::to_string(2 * d));
  }
  for (size_t j = 0; j < k; ++j) {
    const Rational top = integrate(v[j].pow(n));
    require(top == Rational(1L) || top == Rational(-1L), ErrorKind::shape,
            "v_" + std::to_string(j + 1) + "^n integrates to " + top.str() + ", not +-1");
    s.signs.push_back(top.sign());
  }

  Matrix squares(k, k);
  for (size_t j = 0; j < k; ++j) {
    const auto c = (v[j] * v[j]).coefficients();
    for (size_t i = 0; i < k; ++i) squares(i, j) = c[i];
  }
  const auto beta = solve(squares, pontryagin_p1(face).coefficients());
  require(beta.has_value(), ErrorKind::shape, "p1 is not a combination of the squares v_j^2");
  for (size_t j = 0; j < k; ++j) {
    long sum_sq = 0, sum = 0;
    for (size_t i = 0; i < facets; ++i) {
      sum_sq += s.alpha[i][j] * s.alpha[i][j];
      sum += s.alpha[i][j];
    }
    require((*beta)[j] == Rational(sum_sq), ErrorKind::internal,
            "beta from the ring disagrees with the sum of squared facet coefficients");
    s.beta.push_back(sum_sq);
    s.w2.push_back(static_cast<int>(((sum % 2) + 2) % 2));
  }

  IntVector spinc(k, 0);
  for (size_t i = 0; i < facets; ++i)
    for (size_t j = 0; j < k; ++j) spinc[j] += m.spinc_coefficients()[i] * s.alpha[i][j];
  s.model = connected_sum_model(n, s.signs, s.alpha, spinc);
  return s;
}

std::vector<Rational> beta_coefficients(const QuasitoricManifold& m) {
  const auto s = connected_sum_structure(m);
  return {s.beta.begin(), s.beta.end()};
}

}  // namespace qtg
