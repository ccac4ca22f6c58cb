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

#include <span>
#include <vector>

#include "exactalg/laurent.hpp"
#include "exactalg/rational.hpp"

namespace qtg {

struct Sample {
  Rational point;
  Rational value;
};

/// Recovers the Laurent polynomial sum_{e=min_exp}^{max_exp} c_e t^e from
/// samples (t_i, f(t_i)). The first (max_exp - min_exp + 1) samples determine
/// the coefficients through an exact Vandermonde solve after multiplying by
/// t^(-min_exp); every remaining sample is checked against the fit and a
/// mismatch raises ErrorKind::consistency. Points 0 and +-1 are rejected,
/// repeated points raise ErrorKind::interpolation.
HalfLaurent laurent_interpolate(std::span<const Sample> samples, long min_exp, long max_exp);

/// The deterministic sample sequence 2, 3, 4, ... (count entries).
std::vector<Rational> sample_points(size_t count);

/// Coefficients c_0..c_d of the polynomial through (x_i, y_i), i = 0..d,
/// via Newton divided differences.
std::vector<Rational> solve_vandermonde(std::span<const Rational> xs, std::span<const Rational> ys);

}  // namespace qtg
