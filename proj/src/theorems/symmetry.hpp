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

#include <string>
#include <vector>

namespace qtg {

struct SimpleLieGroup {
  std::string name;  // simply connected form, e.g. "Spin(7)"
  std::string type;  // Cartan type, e.g. "B3"
  long rank;
  long dimension;
};

/// Simply connected compact simple Lie groups of rank at most l, one per
/// isomorphism class, in increasing rank.
std::vector<SimpleLieGroup> simple_lie_groups(long max_rank);

/// max dim G / rank G over simple G of rank <= l, from the classification.
/// Argument error for l < 1.
long alpha(long l);
/// The same value read from the published table of alpha_l.
long tabulated_alpha(long l);
/// Groups of rank exactly l with dim G = alpha(l) * l.
std::vector<std::string> extremal_groups(long l);

struct SymmetryBoundInput {
  struct Factor {
    long rank;
    long dimension;
  };
  std::vector<Factor> factors;  // the groups H_i
  long b2 = 0;
};

struct SymmetryBounds {
  long lower;
  long upper;
};

/// sum dim H_i <= N(M x prod H_i/T_i) <= alpha(l) sum rank H_i + b_2(M),
/// l = max rank H_i. Argument error unless each (rank, dim) is that of a
/// simple group.
SymmetryBounds symmetry_bounds(const SymmetryBoundInput& input);

}  // namespace qtg
