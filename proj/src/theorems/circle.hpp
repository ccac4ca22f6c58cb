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

#include "exactalg/linalg.hpp"
#include "genus/bundles.hpp"
#include "polytope/quasitoric.hpp"

namespace qtg {

/// A degree-4 class in T-equivariant cohomology split along
/// H^4(BT) + H^2(BT) (x) H^2(M) + H^4(M).
struct EquivariantDegree4Class {
  Matrix a40;            // n x n, symmetric
  Matrix a22;            // rank T x b_2(M)
  bool a04_zero = true;  // the H^4(M) component vanishes
};

/// The class p_1^T(V + W - TM), with each line lifted so that its weight
/// vanishes at the least vertex and TM lifted by the facet classes.
/// a04_zero is false (and the other parts are zero) when p_1(V + W - TM) is
/// nonzero in H^4(M; Q).
EquivariantDegree4Class degree4_class(const QuasitoricManifold& m, const BundleSpec& bundles = {});

/// A primitive integer xi with a22^T xi = 0. Hypothesis error unless
/// rank T > b_2 and a04 = 0; the message says whether a kernel vector exists
/// anyway.
IntVector find_circle(const EquivariantDegree4Class& a);

struct CircleRestriction {
  Rational pure;                // xi^T a40 xi
  std::vector<Rational> mixed;  // a22^T xi, the (2,2) part after restriction
};
CircleRestriction restrict_to_circle(const EquivariantDegree4Class& a, const IntVector& xi);

}  // namespace qtg
