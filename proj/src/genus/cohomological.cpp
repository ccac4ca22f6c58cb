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

#include "genus/cohomological.hpp"

#include "error.hpp"

namespace qtg {

namespace {

// Power series in one root x, truncated at x^N.
using XSeries = std::vector<Rational>;

XSeries x_mul(const XSeries& a, const XSeries& b) {
  XSeries out(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

XSeries x_inverse(const XSeries& a) {
  require(!a[0].is_zero(), ErrorKind::not_invertible, "series in x with zero constant term");
  XSeries out(a.size());
  out[0] = a[0].inverse();
  for (size_t k = 1; k < a.size(); ++k) {
    Rational acc;
    for (size_t j = 1; j <= k; ++j) acc += a[j] * out[k - j];
    out[k] = -acc * out[0];
  }
  return out;
}

// e^{c x}
XSeries x_exp(const Rational& c, size_t n) {
  XSeries out(n + 1);
  Rational term(1L);
  for (size_t j = 0; j <= n; ++j) {
    out[j] = term;
    term = term * c / Rational(static_cast<long>(j + 1));
  }
  return out;
}

XSeries x_constant(const Rational& c, size_t n) {
  XSeries out(n + 1);
  out[0] = c;
  return out;
}

XSeries x_add(XSeries a, const XSeries& b, const Rational& scale = Rational(1L)) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += scale * b[i];
  return a;
}

// (e^{x/2} - e^{-x/2}) / x
XSeries x_sinh_ratio(size_t n) {
  XSeries out(n + 1);
  Rational fact(1L);  // (2j+1)!
  Rational four(1L);  // 4^j
  for (size_t j = 0; 2 * j <= n; ++j) {
    if (j > 0) {
      fact *= Rational(static_cast<long>((2 * j) * (2 * j + 1)));
      four *= Rational(4L);
    }
    out[2 * j] = (four * fact).inverse();
  }
  return out;
}

// Bivariate series: index k is the q-degree.
using QX = std::vector<XSeries>;

QX qx_constant(const XSeries& c, int order) {
  QX out(order + 1, XSeries(c.size()));
  out[0] = c;
  return out;
}

void qx_mul_binomial(QX& s, const XSeries& c, int step) {
  for (int k = static_cast<int>(s.size()) - 1; k >= step; --k) s[k] = x_add(s[k], x_mul(c, s[k - step]));
}

void qx_div_binomial(QX& s, const XSeries& c, int step) {
  for (int k = step; k < static_cast<int>(s.size()); ++k) s[k] = x_add(s[k], x_mul(c, s[k - step]), Rational(-1L));
}

struct RootSeries {
  QX tangent, v, v_prime, w, exp_half;
};

RootSeries build_root_series(size_t n, int order) {
  const XSeries ex = x_exp(Rational(1L), n);
  const XSeries emx = x_exp(Rational(-1L), n);
  const XSeries minus_ex = x_add(XSeries(n + 1), ex, Rational(-1L));
  const XSeries minus_emx = x_add(XSeries(n + 1), emx, Rational(-1L));
  const XSeries one = x_constant(Rational(1L), n);
  const XSeries minus_one = x_constant(Rational(-1L), n);
  const XSeries sinh_ratio = x_sinh_ratio(n);

  RootSeries r;
  r.tangent = qx_constant(x_inverse(sinh_ratio), order);
  r.v = qx_constant(x_add(one, emx, Rational(-1L)), order);
  r.v_prime = qx_constant(sinh_ratio, order);
  r.w = qx_constant(x_add(x_exp(Rational(1, 2), n), x_exp(Rational(-1, 2), n)), order);
  r.exp_half = qx_constant(x_exp(Rational(1, 2), n), order);
  for (int k = 1; k <= order; ++k) {
    qx_mul_binomial(r.tangent, minus_one, k);
    qx_mul_binomial(r.tangent, minus_one, k);
    qx_div_binomial(r.tangent, minus_ex, k);
    qx_div_binomial(r.tangent, minus_emx, k);
    for (QX* s : {&r.v, &r.v_prime}) {
      qx_mul_binomial(*s, minus_ex, k);
      qx_mul_binomial(*s, minus_emx, k);
      qx_div_binomial(*s, minus_one, k);
      qx_div_binomial(*s, minus_one, k);
    }
    qx_mul_binomial(r.w, ex, k);
    qx_mul_binomial(r.w, emx, k);
    qx_div_binomial(r.w, one, k);
    qx_div_binomial(r.w, one, k);
  }
  return r;
}

using Element = std::vector<Rational>;  // total-basis vector
using QElement = std::vector<Element>;  // indexed by q-degree

class Evaluator {
 public:
  Evaluator(const CharacteristicModel& model, int order) : ring_(*model.ring), order_(order) {}

  QElement one() const {
    QElement out(order_ + 1, Element(ring_.total_dimension()));
    out[0][ring_.offset(0)] = Rational(1L);
    return out;
  }

  QElement substitute(const QX& series, const CohomologyClass& root) const {
    std::vector<Element> powers;
    Element p(ring_.total_dimension());
    p[ring_.offset(0)] = Rational(1L);
    Element r(ring_.total_dimension());
    if (ring_.top_degree() >= 1)
      for (size_t i = 0; i < root.coefficients().size(); ++i) r[ring_.offset(1) + i] = root.coefficients()[i];
    for (int j = 0; j <= ring_.top_degree(); ++j) {
      powers.push_back(p);
      p = ring_.multiply(p, r);
    }
    QElement out(order_ + 1, Element(ring_.total_dimension()));
    for (int k = 0; k <= order_; ++k)
      for (size_t j = 0; j < powers.size(); ++j) {
        const Rational& c = series[k][j];
        if (c.is_zero()) continue;
        for (size_t i = 0; i < powers[j].size(); ++i) out[k][i] += c * powers[j][i];
      }
    return out;
  }

  QElement multiply(const QElement& a, const QElement& b) const {
    QElement out(order_ + 1, Element(ring_.total_dimension()));
    for (int i = 0; i <= order_; ++i)
      for (int j = 0; i + j <= order_; ++j) {
        const Element prod = ring_.multiply(a[i], b[j]);
        for (size_t x = 0; x < prod.size(); ++x) out[i + j][x] += prod[x];
      }
    return out;
  }

  QElement from_class(const CohomologyClass& c) const {
    QElement out(order_ + 1, Element(ring_.total_dimension()));
    if (c.degree() <= ring_.top_degree())
      for (size_t i = 0; i < c.coefficients().size(); ++i) out[0][ring_.offset(c.degree()) + i] = c.coefficients()[i];
    return out;
  }

  RationalQSeries integrate(const QElement& e) const {
    RationalQSeries out(order_);
    const size_t top = ring_.offset(ring_.top_degree());
    for (int k = 0; k <= order_; ++k) out[k] = ring_.integrate_top({e[k][top]});
    return out;
  }

 private:
  const GradedRing& ring_;
  int order_;
};

}  // namespace

RationalQSeries cohomological_index(const CharacteristicModel& model, const Twist& twist, int q_order,
                                    VFactorForm form) {
  require(q_order >= 0, ErrorKind::argument, "negative q-order");
  check_shapes(twist.bundles, model.generators.size());
  const int n = model.ring->top_degree();
  const RootSeries rs = build_root_series(static_cast<size_t>(n), q_order);
  const Evaluator ev(model, q_order);

  QElement total = ev.one();
  auto times = [&](const QX& series, const CohomologyClass& root) {
    total = ev.multiply(total, ev.substitute(series, root));
  };

  for (const auto& root : model.tangent_roots) times(rs.tangent, root);
  std::vector<CohomologyClass> v_classes;
  for (const auto& l : twist.bundles.V) v_classes.push_back(model.line_class(l));

  if (form == VFactorForm::spinc_times_q2) {
    if (twist.spinc_prefactor) {
      require(model.spinc.has_value(), ErrorKind::argument, "model has no spin^c class");
      times(rs.exp_half, *model.spinc);
    }
    for (const auto& a : v_classes) times(rs.v, a);
  } else {
    require(twist.spinc_prefactor && model.spinc.has_value(), ErrorKind::argument,
            "the e(V) form replaces the spin^c prefactor, which must be present");
    CohomologyClass c1 = model.zero(1);
    for (const auto& a : v_classes) c1 += a;
    require(c1 == *model.spinc, ErrorKind::argument, "the e(V) form needs c_1(V) = c_1^c(M)");
    CohomologyClass euler = model.one();
    for (const auto& a : v_classes) euler = euler * a;
    total = ev.multiply(total, ev.from_class(euler));
    for (const auto& a : v_classes) times(rs.v_prime, a);
  }
  for (const auto& l : twist.bundles.W) times(rs.w, model.line_class(l));
  if (twist.tangent_in_w)
    for (const auto& root : model.tangent_roots) times(rs.w, root);

  RationalQSeries out = ev.integrate(total);
  if (twist.tangent_in_w) {
    // Each trivial summand of the stable splitting contributes a factor 2.
    const long extra = static_cast<long>(model.tangent_roots.size()) - n;
    out.scale(Rational(2L).pow(-extra));
  }
  return out;
}

RationalQSeries cohomological_index(const QuasitoricManifold& m, const Twist& twist, int q_order, VFactorForm form) {
  return cohomological_index(characteristic_model(m), twist, q_order, form);
}

Rational euler_class_pairing(const CharacteristicModel& model, const BundleSpec& bundles) {
  check_shapes(bundles, model.generators.size());
  CohomologyClass euler = model.one();
  for (const auto& l : bundles.V) euler = euler * model.line_class(l);
  if (euler.degree() != model.ring->top_degree()) return Rational();
  return integrate(euler);
}

}  // namespace qtg
