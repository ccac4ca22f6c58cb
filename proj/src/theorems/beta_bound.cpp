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

#include "theorems/beta_bound.hpp"

#include "error.hpp"
#include "genus/cohomological.hpp"

namespace qtg {

namespace {

IntVector unit(int k, int i, long scale = 1) {
  IntVector v(k, 0);
  v[i] = scale;
  return v;
}

void add_copies(std::vector<IntVector>& lines, long count, const IntVector& line, const std::string& what) {
  require(count >= 0, ErrorKind::hypothesis,
          "multiplicity of " + what + " would be " + std::to_string(count) + "; beta_i0 <= n+1 holds");
  for (long c = 0; c < count; ++c) lines.push_back(line);
}

}  // namespace

BetaBoundBundles beta_bound_case(const ConnectedSumStructure& s, int i0, int which_case) {
  const int n = s.n, k = s.k;
  require(i0 >= 0 && i0 < k, ErrorKind::argument, "summand index out of range");
  require(which_case == 1 || which_case == 2, ErrorKind::argument, "case must be 1 or 2");
  const long expected = which_case == 1 ? n + 1 : n;
  require((s.w2[i0] - expected) % 2 == 0, ErrorKind::precondition,
          "w2 coefficient of summand " + std::to_string(i0 + 1) + " has the wrong parity for case " +
              std::to_string(which_case));

  BetaBoundBundles out;
  out.which_case = which_case;
  out.i0 = i0;
  IntVector mixed(k, 0);
  for (int i = 0; i < k; ++i) mixed[i] = s.w2[i];
  mixed[i0] = 1;
  out.spinc = mixed;
  out.spinc[i0] = expected;

  auto& V = out.bundles.V;
  auto& W = out.bundles.W;
  if (which_case == 1) {
    V.push_back(unit(k, i0, 2));
    V.push_back(mixed);
    add_copies(V, n - 2, unit(k, i0), "L(v_i0) in V");
  } else {
    V.push_back(mixed);
    add_copies(V, n - 1, unit(k, i0), "L(v_i0) in V");
  }
  for (int i = 0; i < k; ++i) {
    if (i == i0) continue;
    add_copies(W, s.beta[i] - s.w2[i], unit(k, i), "L(v_" + std::to_string(i + 1) + ") in W");
  }
  add_copies(W, s.beta[i0] - (which_case == 1 ? n + 3 : n), unit(k, i0), "L(v_i0) in W");

  const auto& model = s.model;
  CohomologyClass c1 = model.zero(1);
  for (const auto& line : V) c1 += model.line_class(line);
  out.first_chern = c1 == model.line_class(out.spinc);
  CohomologyClass p1 = model.zero(2);
  for (const auto* lines : {&V, &W})
    for (const auto& line : *lines) {
      const auto c = model.line_class(line);
      p1 += c * c;
    }
  out.pontryagin = p1 == pontryagin_p1(model);
  out.w_spin = w_is_spin_free(out.bundles);
  out.euler_pairing = euler_class_pairing(model, out.bundles);
  return out;
}

BetaBoundBundles beta_bound_bundles(const ConnectedSumStructure& s, int i0) {
  require(i0 >= 0 && i0 < s.k, ErrorKind::argument, "summand index out of range");
  return beta_bound_case(s, i0, (s.w2[i0] - (s.n + 1)) % 2 == 0 ? 1 : 2);
}

CharacteristicModel beta_bound_model(const ConnectedSumStructure& s, const BetaBoundBundles& b) {
  CharacteristicModel model = s.model;
  model.spinc = model.line_class(b.spinc);
  return model;
}

}  // namespace qtg
