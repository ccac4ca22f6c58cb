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

#include "theorems/products.hpp"

#include "error.hpp"

namespace qtg {

StabilizerConditions check_stabilizer_conditions(const CharacteristicModel& model,
                                                 const std::vector<CohomologyClass>& x) {
  require(static_cast<int>(x.size()) == model.dimension, ErrorKind::argument,
          "need one class per complex dimension (" + std::to_string(model.dimension) + "), got " +
              std::to_string(x.size()));
  require(model.spinc.has_value(), ErrorKind::argument, "model has no spin^c class");
  CohomologyClass sum = model.zero(1);
  CohomologyClass squares = model.zero(2);
  CohomologyClass prod = model.one();
  for (const auto& c : x) {
    require(c.degree() == 1, ErrorKind::argument, "classes must lie in H^2");
    sum += c;
    squares += c * c;
    prod = prod * c;
  }
  StabilizerConditions out;
  out.first_chern = sum == *model.spinc;
  out.pontryagin = squares == pontryagin_p1(model);
  out.pairing = integrate(prod);
  out.pairing_nonzero = !out.pairing.is_zero();
  return out;
}

StabilizerConditions check_stabilizer_conditions(const QuasitoricManifold& mprime, const std::vector<IntVector>& x) {
  const auto model = characteristic_model(mprime);
  std::vector<CohomologyClass> classes;
  for (const auto& c : x) {
    require(static_cast<int>(c.size()) == mprime.facet_count(), ErrorKind::argument,
            "class needs one coefficient per facet");
    classes.push_back(model.line_class(c));
  }
  return check_stabilizer_conditions(model, classes);
}

ProductFormulaCheck check_product_formula(const QuasitoricManifold& m, const QuasitoricManifold& mprime,
                                          const std::vector<IntVector>& lines, int q_order, Engine engine,
                                          int threads) {
  const auto prod = product(m, mprime);
  Twist pulled;
  for (const auto& c : lines) {
    require(static_cast<int>(c.size()) == mprime.facet_count(), ErrorKind::argument,
            "line needs one coefficient per facet of the second factor");
    IntVector full(m.facet_count(), 0);
    full.insert(full.end(), c.begin(), c.end());
    pulled.bundles.V.push_back(full);
  }
  Twist on_factor;
  on_factor.bundles.V = lines;
  ProductFormulaCheck out{twisted_index(prod, pulled, q_order, engine, threads),
                          twisted_index(m, Twist{}, q_order, engine, threads) *
                              twisted_index(mprime, on_factor, q_order, engine, threads)};
  return out;
}

}  // namespace qtg
