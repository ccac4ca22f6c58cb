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

#include <string>
#include <vector>

#include "polytope/quasitoric.hpp"

namespace qtg {

/// Formal sums of line bundles L(sum_i c_i v_i); each line is its
/// coefficient vector over the generators (facet classes for a quasitoric
/// manifold).
struct BundleSpec {
  std::vector<IntVector> V;
  std::vector<IntVector> W;
  friend bool operator==(const BundleSpec&, const BundleSpec&) = default;
};

/// What the Dirac operator is twisted with.
struct Twist {
  BundleSpec bundles;
  bool tangent_in_w = false;    // W also contains TM (n tangent lines)
  bool spinc_prefactor = true;  // include e^{c/2}; off for the signature operator
  friend bool operator==(const Twist&, const Twist&) = default;
};

/// Checks line lengths against the generator count; argument error otherwise.
void check_shapes(const BundleSpec& b, size_t generators);

/// Sum of W lines reduces to zero in H^2(M; Z/2), i.e. lies in the mod-2
/// row space of lambda.
bool w_is_spin(const QuasitoricManifold& m, const BundleSpec& b);

/// Same test when H^2 is free on the generators (connected-sum models).
bool w_is_spin_free(const BundleSpec& b);

IntVector sum_of_lines(const std::vector<IntVector>& lines, size_t generators);

}  // namespace qtg
