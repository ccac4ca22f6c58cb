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

#include "cohomology/face_ring.hpp"
#include "exactalg/qseries.hpp"
#include "genus/bundles.hpp"

namespace qtg {

enum class VFactorForm {
  spinc_times_q2,  // e^{c/2} * prod Q2(V)
  euler_times_q2p  // e(V) * prod Q2'(V); needs c_1(V) = c
};

/// <e^{c/2} Q1(TM) Q2(V) Q3(W) A-hat(M), [M]> as a q-series, with each
/// factor expanded over the formal roots of the model and integrated.
RationalQSeries cohomological_index(const CharacteristicModel& model, const Twist& twist, int q_order,
                                    VFactorForm form = VFactorForm::spinc_times_q2);
RationalQSeries cohomological_index(const QuasitoricManifold& m, const Twist& twist, int q_order,
                                    VFactorForm form = VFactorForm::spinc_times_q2);

/// Top-degree part of the product of the V line classes, integrated.
Rational euler_class_pairing(const CharacteristicModel& model, const BundleSpec& bundles);

}  // namespace qtg
