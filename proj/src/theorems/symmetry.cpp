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

#include "theorems/symmetry.hpp"

#include <algorithm>

#include "error.hpp"

namespace qtg {

std::vector<SimpleLieGroup> simple_lie_groups(long max_rank) {
  std::vector<SimpleLieGroup> out;
  auto add = [&](std::string name, std::string type, long r, long d) {
    if (r <= max_rank) out.push_back({std::move(name), std::move(type), r, d});
  };
  for (long r = 1; r <= max_rank; ++r) {
    const std::string rs = std::to_string(r);
    add(r == 1 ? "Spin(3)" : "SU(" + std::to_string(r + 1) + ")", "A" + rs, r, r * (r + 2));
    if (r >= 2) add("Spin(" + std::to_string(2 * r + 1) + ")", "B" + rs, r, r * (2 * r + 1));
    if (r >= 3) add("Sp(" + rs + ")", "C" + rs, r, r * (2 * r + 1));
    if (r >= 4) add("Spin(" + std::to_string(2 * r) + ")", "D" + rs, r, r * (2 * r - 1));
  }
  add("G2", "G2", 2, 14);
  add("F4", "F4", 4, 52);
  add("E6", "E6", 6, 78);
  add("E7", "E7", 7, 133);
  add("E8", "E8", 8, 248);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.rank < b.rank; });
  return out;
}

long alpha(long l) {
  require(l >= 1, ErrorKind::argument, "alpha needs l >= 1");
  long best = 0;
  // dim/rank is an integer for every simple group.
  for (const auto& g : simple_lie_groups(l)) best = std::max(best, g.dimension / g.rank);
  return best;
}

long tabulated_alpha(long l) {
  require(l >= 1, ErrorKind::argument, "alpha needs l >= 1");
  if (l == 1) return 3;
  if (l <= 3) return 7;
  if (l <= 6) return 13;
  if (l == 7) return 19;
  if (l <= 14) return 31;
  return 2 * l + 1;
}

std::vector<std::string> extremal_groups(long l) {
  const long a = alpha(l);
  std::vector<std::string> out;
  for (const auto& g : simple_lie_groups(l))
    if (g.rank == l && g.dimension == a * l) out.push_back(g.name);
  return out;
}

SymmetryBounds symmetry_bounds(const SymmetryBoundInput& input) {
  require(!input.factors.empty(), ErrorKind::argument, "need at least one group");
  require(input.b2 >= 0, ErrorKind::argument, "b2 must be non-negative");
  long l = 0, lower = 0, ranks = 0;
  for (const auto& f : input.factors) {
    require(f.rank >= 1 && f.dimension >= 1, ErrorKind::argument, "group rank and dimension must be positive");
    const auto groups = simple_lie_groups(f.rank);
    const bool known = std::any_of(groups.begin(), groups.end(), [&](const SimpleLieGroup& g) {
      return g.rank == f.rank && g.dimension == f.dimension;
    });
    require(known, ErrorKind::argument,
            "no simple group has rank " + std::to_string(f.rank) + " and dimension " + std::to_string(f.dimension));
    l = std::max(l, f.rank);
    lower += f.dimension;
    ranks += f.rank;
  }
  return {lower, alpha(l) * ranks + input.b2};
}

}  // namespace qtg
