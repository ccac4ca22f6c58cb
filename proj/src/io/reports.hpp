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

#include "io/manifest.hpp"
#include "json.hpp"

namespace qtg {

using Json = nlohmann::json;

/// Outcome strings shared by all verification reports.
inline constexpr const char* kPass = "pass";
inline constexpr const char* kViolation = "violation";
inline constexpr const char* kHypothesisUnmet = "hypothesis_unmet";

Json describe_report(const Manifest& manifest);

struct GenusRequest {
  std::string twist = "none";  // none, elliptic, witten, signature, custom
  int q_order = 3;
  std::optional<IntVector> equivariant;
  std::string engine = "localization";  // or cohomological
  int threads = 1;
};
Json genus_report(const Manifest& manifest, const GenusRequest& request);

/// theorem: circle, index-I, thm34, lemma52, table1. The manifest may be
/// absent only for table1.
Json verify_report(const std::optional<Manifest>& manifest, const std::string& theorem, int q_order, int threads);

Json census_report(int n, int k, int entry_bound, int threads);

}  // namespace qtg
