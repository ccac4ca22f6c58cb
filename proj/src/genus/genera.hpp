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

#include "genus/cohomological.hpp"
#include "genus/localization.hpp"

namespace qtg {

enum class Engine { localization, cohomological };

RationalQSeries twisted_index(const QuasitoricManifold& m, const Twist& twist, int q_order, Engine engine,
                              int threads = 1);

/// phi(M; 0, 0) for the spin structure of M; precondition error if not spin.
RationalQSeries witten_genus(const QuasitoricManifold& m, int q_order, Engine engine = Engine::localization,
                             int threads = 1);
/// phi(M; 0, TM) for the spin structure of M; precondition error if not spin.
RationalQSeries elliptic_genus(const QuasitoricManifold& m, int q_order, Engine engine = Engine::localization,
                               int threads = 1);
/// q^0 of the Witten genus.
Rational a_hat_genus(const QuasitoricManifold& m, Engine engine = Engine::localization);
/// Index of A-hat(M) Q3(TM) without the spin^c factor, at q^0.
Rational signature(const QuasitoricManifold& m, Engine engine = Engine::localization);

Twist witten_twist();
Twist elliptic_twist();
Twist signature_twist();

}  // namespace qtg
