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

#include "error.hpp"

namespace qtg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::argument: return "argument";
    case ErrorKind::order_mismatch: return "order-mismatch";
    case ErrorKind::not_invertible: return "not-invertible";
    case ErrorKind::interpolation: return "interpolation";
    case ErrorKind::consistency: return "consistency";
    case ErrorKind::degenerate_circle: return "degenerate-circle";
    case ErrorKind::degree_bound: return "degree-bound";
    case ErrorKind::hypothesis: return "hypothesis";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::shape: return "shape";
    case ErrorKind::parse: return "parse";
    case ErrorKind::validation: return "validation";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

}  // namespace qtg
