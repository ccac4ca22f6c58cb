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

#include "theorems/vanishing.hpp"

#include "cohomology/face_ring.hpp"
#include "error.hpp"
#include "genus/genera.hpp"

namespace qtg {

long index_I(const QuasitoricManifold& m, const IntVector& xi, const BundleSpec& bundles) {
  const int facets = m.facet_count();
  check_shapes(bundles, facets);
  require(static_cast<int>(xi.size()) == m.dimension(), ErrorKind::argument,
          "circle vector length must equal the dimension");
  const auto fps = fixed_points(m);
  auto line_weight = [&](const FixedPointDatum& fp, const IntVector& c) {
    long s = 0;
    for (int j = 0; j < facets; ++j)
      if (c[j] != 0) s += c[j] * dot(fp.facet_weight(j), xi);
    return s;
  };
  std::vector<long> values;
  for (const auto& fp : fps) {
    long value = 0;
    for (const auto* lines : {&bundles.V, &bundles.W})
      for (const auto& c : *lines) {
        const long a = line_weight(fp, c) - line_weight(fps.front(), c);
        value += a * a;
      }
    for (const auto& w : fp.weights) {
      const long t = dot(w, xi);
      if (t == 0) fail(ErrorKind::degenerate_circle, "circle has a zero tangent weight at vertex " + vertex_string(fp.vertex));
      value -= t * t;
    }
    values.push_back(value);
  }
  for (long v : values) {
    if (v == values.front()) continue;
    std::string list;
    for (size_t i = 0; i < fps.size(); ++i)
      list += (i ? ", " : "") + vertex_string(fps[i].vertex) + ": " + std::to_string(values[i]);
    fail(ErrorKind::hypothesis, "p1 of V + W - TM restricts to different multiples of x^2 (" + list + ")");
  }
  return values.front();
}

VanishingCheck vanishing_check(const QuasitoricManifold& m, const IntVector& xi, int q_order, int threads) {
  VanishingCheck out;
  out.index_i = index_I(m, xi);
  out.applies = out.index_i < 0;
  out.index = equivariant_index(m.with_spinc(spin_gamma(m)), xi, witten_twist(), q_order, threads);
  out.vanishes = true;
  for (int k = 0; k <= q_order; ++k)
    if (!out.index.series[k].is_zero()) out.vanishes = false;
  return out;
}

}  // namespace qtg
