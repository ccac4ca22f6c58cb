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

#include <memory>
#include <optional>
#include <vector>

#include "cohomology/graded_ring.hpp"
#include "polytope/quasitoric.hpp"

namespace qtg {

/// Everything the cohomological index needs: a ring with integration, the
/// classes that bundle coefficient vectors refer to, formal roots of the
/// (stable) tangent bundle, and the spin^c class.
struct CharacteristicModel {
  std::shared_ptr<const GradedRing> ring;
  int dimension = 0;
  std::vector<CohomologyClass> generators;
  std::vector<CohomologyClass> tangent_roots;
  std::optional<CohomologyClass> spinc;

  /// sum_i coeffs[i] * generators[i]
  CohomologyClass line_class(const IntVector& coeffs) const;
  CohomologyClass zero(int degree) const { return CohomologyClass::zero(ring, degree); }
  CohomologyClass one() const;
};

/// Q[v_1..v_m] / (Stanley-Reisner ideal + rows of lambda), integrated so that
/// the product of the facet classes at the least vertex pairs to that
/// fixed point's sign.
std::shared_ptr<const GradedRing> build_face_ring(const QuasitoricManifold& m);

/// Generators and tangent roots are the facet classes v_1..v_m; the spin^c
/// class is sum gamma_i v_i.
CharacteristicModel characteristic_model(const QuasitoricManifold& m);

CohomologyClass pontryagin_p1(const CharacteristicModel& model);
CohomologyClass pontryagin_p1(const QuasitoricManifold& m);
CohomologyClass spinc_c1(const QuasitoricManifold& m);

/// A vector mu with lambda^T mu = (1,...,1) mod 2, i.e. sum v_i = w_2 = 0 mod 2.
std::optional<IntVector> spin_witness(const QuasitoricManifold& m);
bool is_spin(const QuasitoricManifold& m);

/// Spin structure as a spin^c vector gamma = lambda^T mu: all entries odd,
/// sum gamma_i v_i = 0. Precondition error if M is not spin.
IntVector spin_gamma(const QuasitoricManifold& m);

/// Human-readable reason M is not spin.
std::string spin_obstruction(const QuasitoricManifold& m);

}  // namespace qtg
