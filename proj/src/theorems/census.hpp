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

#include "polytope/polytope.hpp"

namespace qtg {

/// The k-fold connected sum of n-simplices: each step glues the greatest
/// vertex of the current polytope to the least vertex of a new simplex.
SimplePolytope simplex_chain(int n, int k);

struct CensusReport {
  int n = 0;
  int k = 0;
  int entry_bound = 0;
  size_t enumerated = 0;  // characteristic matrices found
  size_t matched = 0;     // whose cohomology is that of a connected sum of +-CP^n
  std::vector<std::vector<long>> betas;  // distinct, each sorted ascending; list sorted
  std::vector<std::vector<long>> violations;  // betas outside (0, n+1]
  bool bounds_hold() const { return violations.empty(); }
};

/// Enumerates characteristic matrices over simplex_chain(n, k) with entries
/// in [-bound, bound] and collects the beta vectors of the matches. Argument
/// error unless n >= 3 and k >= 1; hypothesis error for k >= n.
CensusReport finiteness_census(int n, int k, int entry_bound, int threads = 1);

}  // namespace qtg
