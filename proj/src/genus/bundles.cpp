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

#include "genus/bundles.hpp"

#include "error.hpp"
#include "exactalg/linalg.hpp"

namespace qtg {

void check_shapes(const BundleSpec& b, size_t generators) {
  for (const auto* lines : {&b.V, &b.W})
    for (const auto& l : *lines)
      require(l.size() == generators, ErrorKind::argument,
              "bundle line has " + std::to_string(l.size()) + " coefficients, expected " + std::to_string(generators));
}

IntVector sum_of_lines(const std::vector<IntVector>& lines, size_t generators) {
  IntVector sum(generators, 0);
  for (const auto& l : lines)
    for (size_t i = 0; i < generators; ++i) sum[i] += l.at(i);
  return sum;
}

bool w_is_spin(const QuasitoricManifold& m, const BundleSpec& b) {
  check_shapes(b, m.facet_count());
  const IntVector sum = sum_of_lines(b.W, m.facet_count());
  const auto& lam = m.lambda();
  std::vector<std::vector<int>> a(lam.cols(), std::vector<int>(lam.rows()));
  std::vector<int> rhs(lam.cols());
  for (int j = 0; j < lam.cols(); ++j) {
    for (int r = 0; r < lam.rows(); ++r) a[j][r] = static_cast<int>(lam(r, j) & 1L);
    rhs[j] = static_cast<int>(sum[j] & 1L);
  }
  return solve_mod2(a, rhs).has_value();
}

bool w_is_spin_free(const BundleSpec& b) {
  if (b.W.empty()) return true;
  const IntVector sum = sum_of_lines(b.W, b.W.front().size());
  for (long x : sum)
    if (x % 2 != 0) return false;
  return true;
}

}  // namespace qtg
