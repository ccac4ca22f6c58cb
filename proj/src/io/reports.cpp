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

#include "io/reports.hpp"

#include "cohomology/connected_sum.hpp"
#include "error.hpp"
#include "genus/genera.hpp"
#include "theorems/beta_bound.hpp"
#include "theorems/census.hpp"
#include "theorems/circle.hpp"
#include "theorems/products.hpp"
#include "theorems/symmetry.hpp"
#include "theorems/vanishing.hpp"

namespace qtg {

namespace {

Json rationals(const RationalQSeries& s) {
  Json out = Json::array();
  for (int k = 0; k <= s.order(); ++k) out.push_back(s[k].str());
  return out;
}

Json laurents(const LaurentQSeries& s) {
  Json out = Json::array();
  for (int k = 0; k <= s.order(); ++k) out.push_back(s[k].str());
  return out;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    out.push_back(row);
  }
  return out;
}

Engine parse_engine(const std::string& name) {
  if (name == "localization") return Engine::localization;
  if (name == "cohomological") return Engine::cohomological;
  fail(ErrorKind::argument, "unknown engine '" + name + "'");
}

Json circle_report(const QuasitoricManifold& m, const BundleSpec& b) {
  const auto a = degree4_class(m, b);
  Json out{{"theorem", "circle"}, {"a04_zero", a.a04_zero}, {"a22", matrix_json(a.a22)},
           {"a40", matrix_json(a.a40)}};
  const auto xi = find_circle(a);
  const auto res = restrict_to_circle(a, xi);
  bool mixed_zero = true;
  for (const auto& c : res.mixed) mixed_zero = mixed_zero && c.is_zero();
  BigInt g = 0;
  for (long x : xi) g = gcd(g, BigInt(x));
  out["xi"] = xi;
  out["mixed_after_restriction_zero"] = mixed_zero;
  out["primitive"] = g == 1;
  out["outcome"] = mixed_zero && g == 1 ? kPass : kViolation;
  return out;
}

Json index_i_report(const QuasitoricManifold& m, const Manifest& manifest, int q_order, int threads) {
  const IntVector xi = manifest.circle ? *manifest.circle : generic_circles(m, 1).at(0);
  Json out{{"theorem", "index-I"}, {"xi", xi}};
  out["index_I"] = index_I(m, xi, manifest.bundles);
  const bool bundles_empty = manifest.bundles.V.empty() && manifest.bundles.W.empty();
  if (!bundles_empty || !is_spin(m)) {
    out["bridge"] = bundles_empty ? "not applicable: manifold is not spin" : "not applicable: bundles present";
    out["outcome"] = kPass;
    return out;
  }
  const auto v = vanishing_check(m, xi, q_order, threads);
  out["bridge"] = v.applies ? "I < 0: equivariant index must vanish" : "I >= 0: no assertion";
  out["equivariant_index"] = laurents(v.index.series);
  out["vanishes"] = v.vanishes;
  out["outcome"] = v.applies && !v.vanishes ? kViolation : kPass;
  return out;
}

Json stabilizer_report(const QuasitoricManifold& m, const Manifest& manifest) {
  const auto r = check_stabilizer_conditions(m, manifest.classes);
  return {{"theorem", "thm34"},
          {"first_chern", r.first_chern},
          {"pontryagin", r.pontryagin},
          {"pairing", r.pairing.str()},
          {"pairing_nonzero", r.pairing_nonzero},
          {"outcome", r.all() ? kPass : kHypothesisUnmet}};
}

Json beta_bound_report(const QuasitoricManifold& m) {
  const auto s = connected_sum_structure(m);
  Json summands = Json::array();
  bool within = true;
  for (int i = 0; i < s.k; ++i) {
    Json entry{{"beta", s.beta[i]}, {"sign", s.signs[i]}, {"w2", s.w2[i]}};
    const bool ok = s.beta[i] > 0 && s.beta[i] <= s.n + 1;
    within = within && ok;
    try {
      const auto b = beta_bound_bundles(s, i);
      entry["case"] = b.which_case;
      entry["bundles_constructed"] = true;
      entry["euler_pairing"] = b.euler_pairing.str();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::hypothesis) throw;
      entry["bundles_constructed"] = false;
      entry["reason"] = e.what();
    }
    entry["within_bound"] = ok;
    summands.push_back(entry);
  }
  const bool applies = s.k < s.n;
  return {{"theorem", "lemma52"},
          {"n", s.n},
          {"k", s.k},
          {"summands", summands},
          {"hypothesis_k_below_n", applies},
          {"outcome", within ? kPass : (applies ? kViolation : kHypothesisUnmet)}};
}

Json table_report() {
  Json rows = Json::array();
  int matches = 0;
  for (long l = 1; l <= 30; ++l) {
    const long a = alpha(l), t = tabulated_alpha(l);
    matches += a == t;
    rows.push_back({{"l", l}, {"alpha", a}, {"table", t}, {"groups", extremal_groups(l)}});
  }
  return {{"theorem", "table1"}, {"rows", rows}, {"matches", matches}, {"outcome", matches == 30 ? kPass : kViolation}};
}

}  // namespace

Json describe_report(const Manifest& manifest) {
  const auto m = build_manifold(manifest);
  const auto model = characteristic_model(m);
  const auto betti = model.ring->betti_numbers();
  Json out{{"n", m.dimension()},
           {"m", m.facet_count()},
           {"vertices", m.polytope().vertex_count()},
           {"chi", m.polytope().vertex_count()},
           {"lefschetz_chi", euler_characteristic(m).str()},
           {"b2", betti.size() > 1 ? betti[1] : 0},
           {"betti", betti},
           {"p1", pontryagin_p1(model).str()},
           {"spin", is_spin(m)},
           {"spinc_c1", model.spinc->str()},
           {"gamma", m.spinc_coefficients()}};
  if (!is_spin(m)) out["spin_obstruction"] = spin_obstruction(m);
  return out;
}

Json genus_report(const Manifest& manifest, const GenusRequest& request) {
  const auto m = build_manifold(manifest);
  const Engine engine = parse_engine(request.engine);
  Json out{{"twist", request.twist}, {"q_order", request.q_order}, {"engine", request.engine}};
  QuasitoricManifold target = m;
  Twist twist;
  if (request.twist == "witten" || request.twist == "elliptic") {
    target = m.with_spinc(spin_gamma(m));
    twist = request.twist == "witten" ? witten_twist() : elliptic_twist();
  } else if (request.twist == "signature") {
    twist = signature_twist();
  } else if (request.twist == "custom") {
    twist.bundles = manifest.bundles;
  } else if (request.twist != "none") {
    fail(ErrorKind::argument, "unknown twist '" + request.twist + "'");
  }
  out["gamma"] = target.spinc_coefficients();
  if (request.equivariant) {
    require(engine == Engine::localization, ErrorKind::argument, "equivariant indices need the localization engine");
    const auto e = equivariant_index(target, *request.equivariant, twist, request.q_order, request.threads);
    out["xi"] = e.xi;
    out["coefficients"] = laurents(e.series);
  } else {
    out["coefficients"] = rationals(twisted_index(target, twist, request.q_order, engine, request.threads));
  }
  return out;
}

Json verify_report(const std::optional<Manifest>& manifest, const std::string& theorem, int q_order, int threads) {
  if (theorem == "table1") return table_report();
  static const std::vector<std::string> known = {"circle", "index-I", "thm34", "lemma52"};
  require(std::find(known.begin(), known.end(), theorem) != known.end(), ErrorKind::argument,
          "unknown theorem '" + theorem + "'");
  require(manifest.has_value(), ErrorKind::argument, "--theorem " + theorem + " needs a manifest");
  const auto m = build_manifold(*manifest);
  if (theorem == "circle") return circle_report(m, manifest->bundles);
  if (theorem == "index-I") return index_i_report(m, *manifest, q_order, threads);
  if (theorem == "thm34") return stabilizer_report(m, *manifest);
  return beta_bound_report(m);
}

Json census_report(int n, int k, int entry_bound, int threads) {
  const auto c = finiteness_census(n, k, entry_bound, threads);
  return {{"n", c.n},
          {"k", c.k},
          {"bound", c.entry_bound},
          {"enumerated", c.enumerated},
          {"matched", c.matched},
          {"betas", c.betas},
          {"violations", c.violations},
          {"outcome", c.bounds_hold() ? kPass : kViolation}};
}

}  // namespace qtg
