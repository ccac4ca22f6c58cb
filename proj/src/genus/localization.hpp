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

#include "exactalg/qseries.hpp"
#include "genus/bundles.hpp"
#include "polytope/quasitoric.hpp"

namespace qtg {

/// Weights of everything at one fixed point after restricting the torus to
/// the circle xi.
struct LocalWeights {
  int sign = 1;
  long spinc = 0;               // c(p): weight of the spin^c line
  std::vector<long> tangent;    // <w_i(p), xi>, all nonzero
  std::vector<long> v;          // V-line weights
  std::vector<long> w;          // W-line weights (tangent lines appended when W contains TM)
};

/// Degenerate-circle error if some tangent weight vanishes.
LocalWeights local_weights(const FixedPointDatum& fp, const IntVector& xi, const Twist& twist,
                           const IntVector& gamma);

/// Atiyah-Bott contribution of one fixed point as a q-series of rationals,
/// evaluated at t = root^2 (the argument is the value of t^(1/2)).
RationalQSeries fixed_point_contribution(const LocalWeights& local, const Rational& root, int q_order);
RationalQSeries fixed_point_contribution(const FixedPointDatum& fp, const IntVector& xi, const Twist& twist,
                                         const IntVector& gamma, const Rational& root, int q_order);

struct EquivariantIndex {
  IntVector xi;
  LaurentQSeries series;
};

/// The circle-equivariant index: per q-degree, the fixed-point sum is
/// sampled at t^(1/2) = 2, 3, 4, ..., interpolated inside an a-priori
/// exponent window and checked on at least three held-out samples.
/// threads caps parallel sampling; the result does not depend on it.
EquivariantIndex equivariant_index(const QuasitoricManifold& m, const IntVector& xi, const Twist& twist,
                                   int q_order, int threads = 1);

/// Primitive circles with all tangent weights nonzero, ordered by the size of
/// the exponent window they induce; xi is listed before -xi.
std::vector<IntVector> generic_circles(const QuasitoricManifold& m, size_t count);

/// Non-equivariant index: the equivariant index at t = 1, computed for two
/// different generic circles that must agree.
RationalQSeries index(const QuasitoricManifold& m, const Twist& twist, int q_order, int threads = 1);

/// Lefschetz number of the de Rham complex for a generic circle at t = 1.
Rational euler_characteristic(const QuasitoricManifold& m);

}  // namespace qtg
