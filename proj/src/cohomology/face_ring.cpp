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

#include "cohomology/face_ring.hpp"

#include "error.hpp"
#include "exactalg/linalg.hpp"

namespace qtg {

CohomologyClass CharacteristicModel::line_class(const IntVector& coeffs) const {
  require(coeffs.size() == generators.size(), ErrorKind::argument,
          "line bundle needs " + std::to_string(generators.size()) + " coefficients, got " +
              std::to_string(coeffs.size()));
  CohomologyClass out = zero(1);
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) out += Rational(coeffs[i]) * generators[i];
  return out;
}

CohomologyClass CharacteristicModel::one() const {
  return CohomologyClass::from_polynomial(ring, {{Monomial(ring->generator_count(), 0), Rational(1L)}}, 0);
}

std::shared_ptr<const GradedRing> build_face_ring(const QuasitoricManifold& m) {
  const auto& p = m.polytope();
  const int n = p.dimension();
  const int facets = p.facet_count();
  auto killed = [&p](const Monomial& mono) {
    std::vector<int> support;
    for (size_t i = 0; i < mono.size(); ++i)
      if (mono[i] > 0) support.push_back(static_cast<int>(i));
    return !support.empty() && !p.is_face(support);
  };
  std::vector<Polynomial> relations;
  for (int r = 0; r < n; ++r) {
    Polynomial rel;
    for (int j = 0; j < facets; ++j) {
      if (m.lambda()(r, j) == 0) continue;
      Monomial mono(facets, 0);
      mono[j] = 1;
      rel[mono] = Rational(m.lambda()(r, j));
    }
    relations.push_back(std::move(rel));
  }
  const Vertex& least = p.vertices().front();
  Monomial top(facets, 0);
  for (int f : least) top[f] = 1;
  const long sign = integer_determinant(m.lambda().minor(least)).get_si() * p.orientation().front();
  try {
    return std::make_shared<const GradedRing>(facets, n, killed, std::move(relations),
                                              GradedRing::Normalization{top, Rational(sign)});
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::internal)
      fail(ErrorKind::consistency, std::string("face ring is degenerate: ") + e.what());
    throw;
  }
}

CharacteristicModel characteristic_model(const QuasitoricManifold& m) {
  CharacteristicModel model;
  model.ring = build_face_ring(m);
  model.dimension = m.dimension();
  for (int j = 0; j < m.facet_count(); ++j) model.generators.push_back(CohomologyClass::generator(model.ring, j));
  model.tangent_roots = model.generators;
  model.spinc = model.line_class(m.spinc_coefficients());
  return model;
}

CohomologyClass pontryagin_p1(const CharacteristicModel& model) {
  CohomologyClass out = model.zero(2);
  for (const auto& r : model.tangent_roots) out += r * r;
  return out;
}

CohomologyClass pontryagin_p1(const QuasitoricManifold& m) { return pontryagin_p1(characteristic_model(m)); }

CohomologyClass spinc_c1(const QuasitoricManifold& m) { return *characteristic_model(m).spinc; }

std::optional<IntVector> spin_witness(const QuasitoricManifold& m) {
  const auto& lam = m.lambda();
  std::vector<std::vector<int>> a(lam.cols(), std::vector<int>(lam.rows()));
  for (int j = 0; j < lam.cols(); ++j)
    for (int r = 0; r < lam.rows(); ++r) a[j][r] = static_cast<int>(lam(r, j) & 1L);
  const auto mu = solve_mod2(a, std::vector<int>(lam.cols(), 1));
  if (!mu) return std::nullopt;
  return IntVector(mu->begin(), mu->end());
}

bool is_spin(const QuasitoricManifold& m) { return spin_witness(m).has_value(); }

IntVector spin_gamma(const QuasitoricManifold& m) {
  const auto mu = spin_witness(m);
  require(mu.has_value(), ErrorKind::precondition, spin_obstruction(m));
  const auto& lam = m.lambda();
  IntVector gamma(lam.cols(), 0);
  for (int j = 0; j < lam.cols(); ++j)
    for (int r = 0; r < lam.rows(); ++r) gamma[j] += lam(r, j) * (*mu)[r];
  return gamma;
}

std::string spin_obstruction(const QuasitoricManifold& m) {
  if (is_spin(m)) return "";
  return "manifold is not spin: w2 = v1 + ... + v" + std::to_string(m.facet_count()) +
         " is nonzero mod 2 (the all-ones vector is not in the mod-2 row space of the characteristic matrix)";
}

}  // namespace qtg
