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

#include <vector>

#include "genus/genera.hpp"

namespace qtg {

/// Conditions on x_1..x_n in H^2(M') for stabilizing with M':
/// sum x_i = c_1^c(M'), sum x_i^2 = p_1(M'), and the product of the x_i
/// pairs nontrivially with [M'].
struct StabilizerConditions {
  bool first_chern = false;
  bool pontryagin = false;
  bool pairing_nonzero = false;
  Rational pairing;
  bool all() const { return first_chern && pontryagin && pairing_nonzero; }
};

/// Classes must be degree-2 elements of the model's ring, one per complex
/// dimension. The model needs a spin^c class.
StabilizerConditions check_stabilizer_conditions(const CharacteristicModel& model, const std::vector<CohomologyClass>& x);
/// Classes given as coefficient vectors over the facet classes of M'.
StabilizerConditions check_stabilizer_conditions(const QuasitoricManifold& mprime, const std::vector<IntVector>& x);

struct ProductFormulaCheck {
  RationalQSeries product_side;  // phi(M x M'; sum of pulled-back lines, 0)
  RationalQSeries factor_side;   // phi(M; 0, 0) * phi(M'; sum of lines, 0)
  bool holds() const { return product_side == factor_side; }
};

/// Lines are coefficient vectors over the facet classes of M'.
ProductFormulaCheck check_product_formula(const QuasitoricManifold& m, const QuasitoricManifold& mprime,
                                          const std::vector<IntVector>& lines, int q_order,
                                          Engine engine = Engine::localization, int threads = 1);

}  // namespace qtg
