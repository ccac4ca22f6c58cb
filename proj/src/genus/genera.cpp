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

#include "genus/genera.hpp"

#include "error.hpp"

namespace qtg {

Twist witten_twist() { return {}; }

Twist elliptic_twist() {
  Twist t;
  t.tangent_in_w = true;
  return t;
}

Twist signature_twist() {
  Twist t;
  t.tangent_in_w = true;
  t.spinc_prefactor = false;
  return t;
}

RationalQSeries twisted_index(const QuasitoricManifold& m, const Twist& twist, int q_order, Engine engine,
                              int threads) {
  if (engine == Engine::cohomological) return cohomological_index(m, twist, q_order);
  return index(m, twist, q_order, threads);
}

RationalQSeries witten_genus(const QuasitoricManifold& m, int q_order, Engine engine, int threads) {
  return twisted_index(m.with_spinc(spin_gamma(m)), witten_twist(), q_order, engine, threads);
}

RationalQSeries elliptic_genus(const QuasitoricManifold& m, int q_order, Engine engine, int threads) {
  return twisted_index(m.with_spinc(spin_gamma(m)), elliptic_twist(), q_order, engine, threads);
}

Rational a_hat_genus(const QuasitoricManifold& m, Engine engine) { return witten_genus(m, 0, engine)[0]; }

Rational signature(const QuasitoricManifold& m, Engine engine) {
  return twisted_index(m, signature_twist(), 0, engine)[0];
}

}  // namespace qtg
