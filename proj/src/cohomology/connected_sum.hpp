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

#include "cohomology/face_ring.hpp"

namespace qtg {

/// Cohomology of a k-fold connected sum of +-CP^n in the basis v_1..v_k with
/// v_i v_j = 0 (i != j) and the integral of v_j^n equal to signs[j].
struct ConnectedSumStructure {
  int n = 0;
  int k = 0;
  CharacteristicModel model;       // generators are v_1..v_k
  std::vector<int> signs;          // integral of v_j^n
  std::vector<long> beta;          // p_1 = sum beta_j v_j^2
  std::vector<int> w2;             // w_2 = sum w2_j v_j mod 2, entries in {0,1}
  std::vector<IntVector> alpha;    // facet classes u_i = sum_j alpha[i][j] v_j; empty when synthetic
};

/// The ring Q[v_1..v_k]/(v_i v_j, v_i^n - signs_i signs_j v_j^n) with the
/// given tangent roots (coefficient vectors over v) and spin^c class.
CharacteristicModel connected_sum_model(int n, const std::vector<int>& signs, const std::vector<IntVector>& roots,
                                        const IntVector& spinc);

/// A ring-level model that need not come from a manifold: tangent roots are
/// beta_j copies of v_j, so p_1 = sum beta_j v_j^2 and w_2 = sum beta_j v_j.
ConnectedSumStructure synthetic_connected_sum(int n, const std::vector<int>& signs, const std::vector<long>& beta);

/// Recognizes H^*(M;Q) as the cohomology of a connected sum of +-CP^n
/// (n >= 3): finds v_1..v_k, checks integrality, and reads off beta. Shape
/// error when the ring is not of that form.
ConnectedSumStructure connected_sum_structure(const QuasitoricManifold& m);

/// Coefficients of p_1(M) on the basis v_1^2..v_k^2.
std::vector<Rational> beta_coefficients(const QuasitoricManifold& m);

}  // namespace qtg
