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

#include "exactalg/qseries.hpp"

namespace qtg {

namespace {

template <class Coeff, class Fmt>
std::string render(const TruncatedSeries<Coeff>& s, Fmt fmt) {
  std::string out;
  for (int k = 0; k <= s.order(); ++k) {
    if (k) out += ", ";
    out += fmt(s[k]);
  }
  return out;
}

}  // namespace

std::string to_string(const RationalQSeries& s) {
  return render(s, [](const Rational& r) { return r.str(); });
}

std::string to_string(const LaurentQSeries& s) {
  return render(s, [](const HalfLaurent& h) { return h.str(); });
}

}  // namespace qtg
