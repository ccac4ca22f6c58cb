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

#include <optional>
#include <string>
#include <vector>

#include "genus/bundles.hpp"
#include "polytope/quasitoric.hpp"

namespace qtg {

/// Either a named constructor with integer parameters or an explicit vertex
/// list (facets 1-based, as written in the file).
struct PolytopeSource {
  std::string builtin;      // "simplex", "cube", "polygon", "simplex-chain"; empty when explicit
  std::vector<long> params;
  int dimension = 0;
  int facets = 0;
  std::vector<std::vector<int>> vertices;
  friend bool operator==(const PolytopeSource&, const PolytopeSource&) = default;
};

struct Manifest {
  PolytopeSource polytope;
  std::vector<IntVector> lambda;  // rows
  std::optional<IntVector> gamma;
  BundleSpec bundles;
  std::optional<IntVector> circle;
  std::vector<IntVector> classes;
  friend bool operator==(const Manifest&, const Manifest&) = default;
};

/// Parse error with "line N: ..." on malformed text; the structure is not
/// validated as a manifold here.
Manifest parse_manifest(const std::string& text);
Manifest load_manifest(const std::string& path);
std::string serialize_manifest(const Manifest& m);

SimplePolytope build_polytope(const PolytopeSource& source);
/// Validation error naming the failing vertices when lambda is not unimodular.
QuasitoricManifold build_manifold(const Manifest& m);

}  // namespace qtg
