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

#include "cohomology/connected_sum.hpp"
#include "genus/bundles.hpp"

namespace qtg {

/// Twisting data that would force a nonzero index if some beta_{i0} exceeded
/// n + 1. Case 1 applies when w2_{i0} = n + 1 mod 2, case 2 when
/// w2_{i0} = n mod 2; coefficient vectors are over v_1..v_k.
struct BetaBoundBundles {
  int which_case = 0;
  int i0 = 0;
  IntVector spinc;
  BundleSpec bundles;
  bool first_chern = false;  // c_1(V) = spinc
  bool pontryagin = false;   // p_1(V + W - TM) = 0
  bool w_spin = false;
  Rational euler_pairing;    // <e(V), [M]>
  bool all_checks() const { return first_chern && pontryagin && w_spin; }
};

/// Hypothesis error when a multiplicity would be negative, which means
/// beta_{i0} <= n + 1 already holds.
BetaBoundBundles beta_bound_case(const ConnectedSumStructure& s, int i0, int which_case);
/// The case picked by the parity of w2_{i0}.
BetaBoundBundles beta_bound_bundles(const ConnectedSumStructure& s, int i0);

/// The structure's model with its spin^c class replaced by the bundles' choice.
CharacteristicModel beta_bound_model(const ConnectedSumStructure& s, const BetaBoundBundles& b);

}  // namespace qtg
