// SPDX-License-Identifier: Apache-2.0
//
// hybrid-secrecy: secrecy metrics of underlay cognitive hybrid RF/FSO links
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "hybrid_secrecy/cun_cdf.hpp"

#include "hybrid_secrecy/detail/compensated_sum.hpp"
#include "hybrid_secrecy/errors.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace hsec {

namespace {

bool same_alpha(const RfChannelParams& a, const RfChannelParams& b) {
  return std::abs(a.alpha - b.alpha) <= 1e-12 * std::max(a.alpha, b.alpha);
}

void require_gamma(double gamma, const char* what) {
  if (!(gamma >= 0.0)) {
    throw DomainError(std::string(what) + " requires gamma >= 0, got " +
                      std::to_string(gamma));
  }
}

void require_equal_alpha(const RfChannelParams& rf_sr, const RfChannelParams& rf_sp,
                         const char* what) {
  if (!same_alpha(rf_sr, rf_sp)) {
    std::ostringstream msg;
    msg << what << " needs alpha_p = alpha_r (got alpha_p=" << rf_sp.alpha
        << ", alpha_r=" << rf_sr.alpha << ")";
    throw UnsupportedParameters(msg.str());
  }
}

double log_factorial(int n) { return std::lgamma(n + 1.0); }

// x^{p} with 0^0 = 1.
double power(double x, double p) { return p == 0.0 ? 1.0 : std::pow(x, p); }

double checked_probability(double value, const char* what) {
  constexpr double kSlack = 1e-7;
  if (!(value >= -kSlack && value <= 1.0 + kSlack)) {
    std::ostringstream msg;
    msg << what << " left [0, 1]: " << value;
    throw NumericalIntegrityError(msg.str());
  }
  return std::clamp(value, 0.0, 1.0);
}

}  // namespace

// ---------------------------------------------------------------------------
// Scenario I
// ---------------------------------------------------------------------------

std::vector<InterferenceTerm> interference_terms(const RfChannelParams& rf_sr,
                                                 const RfChannelParams& rf_sp,
                                                 const PowerConstraints& pc) {
  rf_sr.validate();
  rf_sp.validate();
  pc.validate();
  const double ar = rf_sr.alpha_t();
  const double ap = rf_sp.alpha_t();
  const double dp = rf_sp.delta();
  const double dr = rf_sr.delta();
  const double log_psi_q = std::log(pc.psi_q());
  std::vector<InterferenceTerm> terms;
  for (int mr = 0; mr < rf_sr.mu; ++mr) {
    InterferenceTerm t;
    t.mr = mr;
    t.k = (rf_sp.theta() + ar * mr + 1.0) / ap;
    t.delta_p = dp;
    t.xi = dr * std::exp(-ar * log_psi_q);
    t.exponent = ar;
    t.scale = same_alpha(rf_sr, rf_sp) ? 1.0 : ar / ap;
    t.coef = std::exp(rf_sp.mu * std::log(dp) + mr * std::log(dr) + std::lgamma(t.k) -
                      ar * mr * log_psi_q - std::lgamma(rf_sp.mu) - log_factorial(mr));
    terms.push_back(t);
  }
  return terms;
}

namespace {

// H^{1,1}_{1,1}[w | (1-k, A); (0, 1)] = int_0^inf y^{k-1} e^{-y - w y^A} dy.
// With y = u w^{-1/A} the integrand stays O(1) for large w, where the
// contour integral loses its digits to cancellation.
double rational_kernel_laplace(double k, double w, double scale, double tol) {
  boost::math::quadrature::exp_sinh<double> integrator;
  const double eps = std::exp(-std::log(w) / scale);
  auto f = [&](double u) {
    if (u <= 0.0) return 0.0;
    return std::exp((k - 1.0) * std::log(u) - std::pow(u, scale) - eps * u);
  };
  return std::exp(-(k / scale) * std::log(w)) *
         integrator.integrate(f, tol, nullptr, nullptr, nullptr);
}

}  // namespace

double interference_factor(const InterferenceTerm& t, double x,
                           const specfun::ContourPolicy& policy) {
  if (x == 0.0) return std::pow(t.delta_p, -t.k);
  if (t.scale == 1.0) {
    return std::exp(-t.k * std::log(t.delta_p + t.xi * std::pow(x, t.exponent)));
  }
  const double w = t.xi * std::pow(t.delta_p, -t.scale) * std::pow(x, t.exponent);
  const double pref = std::exp(-t.k * std::log(t.delta_p) - std::lgamma(t.k));
  try {
    return pref * specfun::fox_h(specfun::rational_kernel(t.k, w, t.scale), policy);
  } catch (const ConvergenceError&) {
    return pref * rational_kernel_laplace(t.k, w, t.scale, policy.tolerance);
  }
}

specfun::PowerKernel interference_kernel(const InterferenceTerm& t, double sigma,
                                         double* prefactor) {
  const double w =
      t.xi * std::pow(t.delta_p, -t.scale) * std::pow(sigma, t.exponent);
  if (prefactor) {
    *prefactor = std::exp(-t.k * std::log(t.delta_p) - std::lgamma(t.k));
  }
  return {specfun::rational_kernel(t.k, w, t.scale), t.exponent};
}

double cdf_rf_scenario1(const RfChannelParams& rf_sr, const RfChannelParams& rf_sp,
                        const PowerConstraints& pc, double gamma) {
  require_equal_alpha(rf_sr, rf_sp, "cdf_rf_scenario1");
  require_gamma(gamma, "cdf_rf_scenario1");
  if (gamma == 0.0) return 0.0;
  if (std::isinf(gamma)) return 1.0;
  const double a = rf_sr.alpha_t();
  double sum = 0.0;
  for (const auto& t : interference_terms(rf_sr, rf_sp, pc)) {
    sum += std::exp(std::log(t.coef) + a * t.mr * std::log(gamma) -
                    t.k * std::log(t.delta_p + t.xi * std::pow(gamma, a)));
  }
  return checked_probability(1.0 - sum, "cdf_rf_scenario1");
}

double cdf_rf_scenario1_general(const RfChannelParams& rf_sr,
                                const RfChannelParams& rf_sp,
                                const PowerConstraints& pc, double gamma,
                                const specfun::ContourPolicy& policy) {
  require_gamma(gamma, "cdf_rf_scenario1_general");
  if (gamma == 0.0) return 0.0;
  if (std::isinf(gamma)) return 1.0;
  if (same_alpha(rf_sr, rf_sp)) return cdf_rf_scenario1(rf_sr, rf_sp, pc, gamma);
  double sum = 0.0;
  for (const auto& t : interference_terms(rf_sr, rf_sp, pc)) {
    const double j = interference_factor(t, gamma, policy);
    if (j == 0.0) continue;
    sum += std::exp(std::log(t.coef) + t.exponent * t.mr * std::log(gamma) + std::log(j));
  }
  return checked_probability(1.0 - sum, "cdf_rf_scenario1_general");
}

double cdf_hybrid_scenario1(const SecrecyConfig& cfg, double gamma,
                            const specfun::ContourPolicy& policy) {
  cfg.validate();
  return cdf_rf_scenario1_general(cfg.rf_sr, cfg.rf_sp, cfg.pc, gamma, policy) *
         fso_blocked_cdf(cfg.fso, gamma, policy);
}

double cdf_hybrid_scenario1_expanded(const SecrecyConfig& cfg, double gamma,
                                     const specfun::ContourPolicy& policy) {
  cfg.validate();
  require_gamma(gamma, "cdf_hybrid_scenario1_expanded");
  if (gamma == 0.0) return 0.0;
  const double po = cfg.fso.blockage_p;
  std::vector<double> g_values;
  for (auto& t : malaga_cdf_terms(cfg.fso)) {
    t.kernel.z *= gamma;
    g_values.push_back(t.weight * specfun::meijer_g(t.kernel, policy));
  }
  double fso_sum = 0.0;
  for (double g : g_values) fso_sum += g;

  double value = po + (1.0 - po) * fso_sum;
  for (const auto& t : interference_terms(cfg.rf_sr, cfg.rf_sp, cfg.pc)) {
    const double rf = t.coef * power(gamma, t.exponent * t.mr) *
                      interference_factor(t, gamma, policy);
    value -= po * rf;
    for (double g : g_values) value -= (1.0 - po) * rf * g;
  }
  return checked_probability(value, "cdf_hybrid_scenario1_expanded");
}

// ---------------------------------------------------------------------------
// Scenario II
// ---------------------------------------------------------------------------

Scenario2Constants scenario2_constants(const RfChannelParams& rf_sr,
                                       const RfChannelParams& rf_sp,
                                       const PowerConstraints& pc) {
  rf_sr.validate();
  rf_sp.validate();
  pc.validate();
  const double a_r = rf_sr.alpha_t();
  const double a_p = rf_sp.alpha_t();
  const double psi_q = pc.psi_q();
  const double psi_t = pc.psi_t();
  const double log_y0 = std::log(psi_q) - std::log(psi_t);
  const double dp = rf_sp.delta();
  const double dr = rf_sr.delta();

  Scenario2Constants c;
  c.a = a_r;
  c.delta_p = dp;
  c.xi = dr * std::pow(psi_q, -a_r);
  c.d0 = dr * std::pow(psi_t, -a_r);
  c.c_p = dp * std::exp(a_p * log_y0);
  c.xi5 = specfun::regularized_upper_gamma(rf_sp.mu, c.c_p);

  double sum_xi1 = 0.0;
  for (int mp = 0; mp < rf_sp.mu; ++mp) {
    const double log_t = mp * std::log(c.c_p) - log_factorial(mp);
    c.xi1.push_back(std::exp(log_t - c.c_p));
    sum_xi1 += c.xi1.back();
  }
  c.x_const = 1.0 + c.xi5 - sum_xi1;

  for (int mr = 0; mr < rf_sr.mu; ++mr) {
    c.xi2.push_back(std::exp(mr * std::log(c.d0) - log_factorial(mr)));
  }
  for (int mp = 0; mp < rf_sp.mu; ++mp) {
    std::vector<double> row;
    for (int mr = 0; mr < rf_sr.mu; ++mr) {
      row.push_back(std::exp(mp * std::log(c.c_p) - log_factorial(mp) +
                             mr * std::log(c.d0) - log_factorial(mr)));
    }
    c.xi3.push_back(std::move(row));
  }

  // The Psi_Q / |g_p|^2 <= Psi_T branch needs a common alpha for the
  // incomplete gamma to have integer order.
  if (same_alpha(rf_sr, rf_sp)) {
    for (int mr = 0; mr < rf_sr.mu; ++mr) {
      const int omega = rf_sp.mu + mr;
      std::vector<double> row;
      for (int m3 = 0; m3 < omega; ++m3) {
        row.push_back(std::exp(rf_sp.mu * std::log(dp) + mr * std::log(dr) -
                               a_r * mr * std::log(psi_q) + log_factorial(omega - 1) -
                               c.c_p + a_r * m3 * log_y0 - std::lgamma(rf_sp.mu) -
                               log_factorial(mr) - log_factorial(m3)));
      }
      c.e.push_back(std::move(row));
    }
  }
  return c;
}

double lambda1(const RfChannelParams& rf_sr, const RfChannelParams& rf_sp,
               const PowerConstraints& pc, double gamma) {
  require_gamma(gamma, "lambda1");
  const Scenario2Constants c = scenario2_constants(rf_sr, rf_sp, pc);
  if (gamma == 0.0) return 0.0;
  const double xa = std::pow(gamma, c.a);
  double sum_xi1 = 0.0;
  for (double v : c.xi1) sum_xi1 += v;
  double value = 1.0 - sum_xi1;
  for (int mr = 0; mr < rf_sr.mu; ++mr) {
    const double gm = power(xa, mr) * std::exp(-c.d0 * xa);
    value -= c.xi2[mr] * gm;
    for (int mp = 0; mp < rf_sp.mu; ++mp) {
      value += c.xi3[mp][mr] * gm * std::exp(-c.c_p);
    }
  }
  return checked_probability(value, "lambda1");
}

namespace {

double p2_closed(const Scenario2Constants& c, int mu_p, int mu_r, double gamma) {
  const double xa = std::pow(gamma, c.a);
  const double lambda = c.delta_p + c.xi * xa;
  double sum = 0.0;
  for (int mr = 0; mr < mu_r; ++mr) {
    const int omega = mu_p + mr;
    const double base = power(xa, mr) * std::exp(-c.d0 * xa);
    for (int m3 = 0; m3 < omega; ++m3) {
      sum += c.e[mr][m3] * base * std::pow(lambda, m3 - omega);
    }
  }
  return sum;
}

}  // namespace

double lambda2(const RfChannelParams& rf_sr, const RfChannelParams& rf_sp,
               const PowerConstraints& pc, double gamma, const SeriesPolicy& sp) {
  sp.validate();
  require_gamma(gamma, "lambda2");
  require_equal_alpha(rf_sr, rf_sp, "lambda2");
  const Scenario2Constants c = scenario2_constants(rf_sr, rf_sp, pc);
  const double value = c.xi5 - p2_closed(c, rf_sp.mu, rf_sr.mu, gamma);
  return checked_probability(value, "lambda2");
}

SeriesReport lambda2_series(const RfChannelParams& rf_sr,
                            const RfChannelParams& rf_sp,
                            const PowerConstraints& pc, double gamma,
                            const SeriesPolicy& sp) {
  sp.validate();
  require_gamma(gamma, "lambda2_series");
  require_equal_alpha(rf_sr, rf_sp, "lambda2_series");
  const Scenario2Constants c = scenario2_constants(rf_sr, rf_sp, pc);
  const double a = c.a;
  const double xa = std::pow(gamma, a);
  const double ratio = c.xi * xa / c.delta_p;
  const double common = std::exp(-c.d0 * xa);
  // Outside the disc the terms can underflow to zero and fake convergence.
  if (!(ratio < 1.0)) {
    std::ostringstream msg;
    msg << "lambda2 m5 series diverges: xi x^a / delta_p = " << ratio << " >= 1";
    throw ConvergenceError(msg.str(), c.xi5, c.xi5);
  }

  SeriesReport report;
  detail::CompensatedSum p2(sp.compensated);
  for (int mr = 0; mr < rf_sr.mu; ++mr) {
    const int omega = rf_sp.mu + mr;
    for (int m3 = 0; m3 < omega; ++m3) {
      // e[mr][m3] carries delta_p^{mu_p} ... y0^{a m3}; expanding
      // (delta_p + xi x^a)^{m3} and (delta_p + xi x^a)^{-omega} separately
      // gives the m4 and m5 sums.
      for (int m4 = 0; m4 <= m3; ++m4) {
        const double binom43 = std::exp(log_factorial(m3) - log_factorial(m4) -
                                        log_factorial(m3 - m4));
        double term = c.e[mr][m3] * binom43 * power(xa, mr) * common *
                      std::pow(c.delta_p, m3 - m4 - omega) * power(c.xi * xa, m4);
        detail::CompensatedSum inner(sp.compensated);
        int small = 0;
        int m5 = 0;
        for (; m5 < sp.max_terms; ++m5) {
          inner.add(term);
          const double partial = inner.value();
          if (std::abs(term) <= sp.tolerance * std::abs(partial)) {
            if (++small >= 3) break;
          } else {
            small = 0;
          }
          term *= -(omega + m5) / (m5 + 1.0) * ratio;
        }
        report.terms = std::max(report.terms, m5 + 1);
        report.bound = std::max(report.bound, std::abs(term));
        if (m5 >= sp.max_terms) {
          std::ostringstream msg;
          msg << "lambda2 m5 series did not converge in " << sp.max_terms
              << " terms (ratio xi x^a / delta_p = " << ratio << ")";
          throw ConvergenceError(msg.str(), c.xi5 - p2.value() - inner.value(),
                                 c.xi5 - p2.value());
        }
        p2.add(inner.value());
      }
    }
  }
  report.value = c.xi5 - p2.value();
  return report;
}

double cdf_rf_scenario2(const RfChannelParams& rf_sr, const RfChannelParams& rf_sp,
                        const PowerConstraints& pc, double gamma,
                        const SeriesPolicy& sp) {
  require_gamma(gamma, "cdf_rf_scenario2");
  if (gamma == 0.0) return 0.0;
  return checked_probability(
      lambda1(rf_sr, rf_sp, pc, gamma) + lambda2(rf_sr, rf_sp, pc, gamma, sp),
      "cdf_rf_scenario2");
}

double cdf_hybrid_scenario2(const SecrecyConfig& cfg, double gamma,
                            const SeriesPolicy& sp,
                            const specfun::ContourPolicy& policy) {
  cfg.validate();
  return cdf_rf_scenario2(cfg.rf_sr, cfg.rf_sp, cfg.pc, gamma, sp) *
         fso_blocked_cdf(cfg.fso, gamma, policy);
}

double cdf_hybrid_scenario2_expanded(const SecrecyConfig& cfg, double gamma,
                                     const SeriesPolicy& sp,
                                     const specfun::ContourPolicy& policy) {
  cfg.validate();
  sp.validate();
  require_gamma(gamma, "cdf_hybrid_scenario2_expanded");
  require_equal_alpha(cfg.rf_sr, cfg.rf_sp, "cdf_hybrid_scenario2_expanded");
  if (gamma == 0.0) return 0.0;
  const Scenario2Constants c = scenario2_constants(cfg.rf_sr, cfg.rf_sp, cfg.pc);
  const double xa = std::pow(gamma, c.a);
  double braces = c.x_const;
  for (int mr = 0; mr < cfg.rf_sr.mu; ++mr) {
    const double gm = power(xa, mr) * std::exp(-c.d0 * xa);
    braces -= c.xi2[mr] * gm;
    for (int mp = 0; mp < cfg.rf_sp.mu; ++mp) {
      braces += c.xi3[mp][mr] * gm * std::exp(-c.c_p);
    }
  }
  braces -= p2_closed(c, cfg.rf_sp.mu, cfg.rf_sr.mu, gamma);

  const double po = cfg.fso.blockage_p;
  double fso_sum = 0.0;
  for (auto& t : malaga_cdf_terms(cfg.fso)) {
    t.kernel.z *= gamma;
    fso_sum += t.weight * specfun::meijer_g(t.kernel, policy);
  }
  return checked_probability(po * braces + (1.0 - po) * fso_sum * braces,
                             "cdf_hybrid_scenario2_expanded");
}

}  // namespace hsec
