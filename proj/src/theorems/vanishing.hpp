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

#include "genus/localization.hpp"

namespace qtg {

/// The integer I with p_1^{S^1}(V + W - TM) = I x^2 at every fixed point,
/// for lines lifted to act trivially over the least vertex. Degenerate-circle
/// error for a non-generic xi; hypothesis error, listing the per-vertex
/// values, when they disagree.
long index_I(const QuasitoricManifold& m, const IntVector& xi, const BundleSpec& bundles = {});

struct VanishingCheck {
  long index_i = 0;
  bool applies = false;   // index_i < 0
  bool vanishes = false;  // every q-coefficient is the zero Laurent polynomial
  EquivariantIndex index;
};

/// I for V = W = 0 together with the equivariant index of the Dirac operator
/// of the spin structure (precondition error if M is not spin). A negative I
/// forces vanishes to be true.
VanishingCheck vanishing_check(const QuasitoricManifold& m, const IntVector& xi, int q_order, int threads = 1);

}  // namespace qtg
