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

#include "hybrid_secrecy/channels.hpp"

#include "hybrid_secrecy/errors.hpp"

#include <boost/math/special_functions/binomial.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace hsec {

namespace {

void require_gamma(double gamma, const char* what) {
  if (!(gamma >= 0.0)) {
    throw DomainError(std::string(what) + " requires gamma >= 0, got " +
                      std::to_string(gamma));
  }
}

// Weights are formed in log space: chi and upsilon individually overflow for
// tiny g while their product stays moderate.
struct LogWeights {
  double log_chi = 0.0;
  std::vector<double> log_vartheta;
};

LogWeights log_weights(const FsoLinkParams& f) {
  const double a = f.alpha_o;
  const double b = f.beta_o;
  const double gb_om = std::log(f.g * b + f.omega);
  LogWeights w;
  w.log_chi = std::log(2.0) + 0.5 * a * std::log(a) - (1.0 + 0.5 * a) * std::log(f.g) -
              std::lgamma(a) + (b + 0.5 * a) * (std::log(f.g * b) - gb_om);
  for (int m = 1; m <= f.beta_o; ++m) {
    const double log_binom =
        std::log(boost::math::binomial_coefficient<double>(f.beta_o - 1, m - 1));
    const double log_upsilon = log_binom + (1.0 - 0.5 * m) * gb_om -
                               std::lgamma(static_cast<double>(m)) +
                               (m - 1) * (std::log(f.omega) - std::log(f.g)) +
                               0.5 * m * (std::log(a) - std::log(b));
    w.log_vartheta.push_back(log_upsilon -
                             0.5 * (a + m) * (std::log(a * b) - gb_om));
  }
  return w;
}

template <typename F>
double with_context(const char* what, F&& f) {
  try {
    return f();
  } catch (const ConvergenceError& e) {
    throw ConvergenceError(std::string(what) + ": " + e.what(), e.last_estimate(),
                           e.previous_estimate());
  }
}

}  // namespace

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

void RfChannelParams::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("alpha must be positive, got " + std::to_string(alpha));
  }
  if (mu < 1) throw DomainError("mu must be a positive integer");
  if (!std::isfinite(avg_snr_db)) throw DomainError("average SNR must be finite");
}

double RfChannelParams::delta() const { return std::pow(avg_snr(), -alpha_t()); }

void FsoLinkParams::validate() const {
  if (!(alpha_o > 0.0) || !std::isfinite(alpha_o)) {
    throw DomainError("alpha_o must be positive");
  }
  if (beta_o < 1) throw DomainError("beta_o must be a positive integer");
  if (!(g > 0.0) || !std::isfinite(g)) throw DomainError("g must be positive");
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("omega must be positive");
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw DomainError("epsilon must be positive");
  }
  if (s != 1 && s != 2) throw DomainError("detection order s must be 1 or 2");
  if (!std::isfinite(avg_snr_db)) throw DomainError("FSO average SNR must be finite");
  if (!(blockage_p >= 0.0 && blockage_p <= 1.0)) {
    throw DomainError("blockage probability must lie in [0, 1]");
  }
}

double electrical_snr(const FsoLinkParams& f) {
  f.validate();
  const double phi = db_to_linear(f.avg_snr_db);
  if (f.s == 1) return phi;
  const double e2 = f.epsilon * f.epsilon;
  const double num = f.alpha_o * e2 * (e2 + 2.0) * (f.g + f.omega) * phi;
  const double den = (e2 + 1.0) * (e2 + 1.0) * (f.alpha_o + 1.0) *
                     (2.0 * f.g * (f.g + 2.0 * f.omega) +
                      f.omega * f.omega * (1.0 + 1.0 / f.beta_o));
  return num / den;
}

FsoConstants fso_constants(const FsoLinkParams& f) {
  f.validate();
  const LogWeights lw = log_weights(f);
  const double e2 = f.epsilon * f.epsilon;
  const double s = f.s;
  FsoConstants c;
  c.chi = std::exp(lw.log_chi);
  c.varpi = e2 * f.alpha_o * f.beta_o * (f.g + f.omega) /
            ((e2 + 1.0) * (f.g * f.beta_o + f.omega));
  c.k = e2 * c.chi / (std::pow(2.0, s) * std::pow(2.0 * std::numbers::pi, s - 1.0));
  c.v = std::pow(c.varpi, s) / std::pow(s, 2.0 * s);
  c.mu_s = electrical_snr(f);
  for (int k = 1; k <= f.s; ++k) c.q1.push_back((e2 + k) / s);
  for (int m = 1; m <= f.beta_o; ++m) {
    const double lv = lw.log_vartheta[m - 1];
    c.vartheta.push_back(std::exp(lv));
    c.upsilon.push_back(
        std::exp(lv + 0.5 * (f.alpha_o + m) *
                          std::log(f.alpha_o * f.beta_o / (f.g * f.beta_o + f.omega))));
    c.varsigma.push_back(std::exp(lv + (f.alpha_o + m - 1.0) * std::log(s)));
    std::vector<double> q2;
    for (int k = 0; k < f.s; ++k) q2.push_back((e2 + k) / s);
    for (int k = 0; k < f.s; ++k) q2.push_back((f.alpha_o + k) / s);
    for (int k = 0; k < f.s; ++k) q2.push_back((m + k) / s);
    c.q2.push_back(std::move(q2));
  }
  return c;
}

double alpha_mu_pdf(const RfChannelParams& ch, double gamma) {
  ch.validate();
  require_gamma(gamma, "alpha_mu_pdf");
  const double at = ch.alpha_t();
  const double th = ch.theta();
  if (gamma == 0.0) {
    if (th > 0.0) return 0.0;
    if (th == 0.0) return at * std::pow(ch.delta(), ch.mu) / std::tgamma(ch.mu);
    return std::numeric_limits<double>::infinity();
  }
  const double d = ch.delta();
  const double log_f = std::log(at) + ch.mu * std::log(d) - std::lgamma(ch.mu) -
                       d * std::pow(gamma, at) + th * std::log(gamma);
  return std::exp(log_f);
}

double alpha_mu_cdf(const RfChannelParams& ch, double gamma) {
  ch.validate();
  require_gamma(gamma, "alpha_mu_cdf");
  if (gamma == 0.0) return 0.0;
  return specfun::regularized_lower_gamma(ch.mu, ch.delta() * std::pow(gamma, ch.alpha_t()));
}

double alpha_mu_cdf_sum(const RfChannelParams& ch, double gamma) {
  ch.validate();
  require_gamma(gamma, "alpha_mu_cdf_sum");
  if (gamma == 0.0) return 0.0;
  const double x = ch.delta() * std::pow(gamma, ch.alpha_t());
  double term = 1.0;
  double sum = 1.0;
  for (int m = 1; m < ch.mu; ++m) {
    term *= x / m;
    sum += term;
  }
  return 1.0 - std::exp(-x) * sum;
}

std::vector<FsoCdfTerm> malaga_cdf_terms(const FsoLinkParams& f) {
  const FsoConstants c = fso_constants(f);
  const LogWeights lw = log_weights(f);
  const double e2 = f.epsilon * f.epsilon;
  const double log_k = std::log(e2) + lw.log_chi - f.s * std::log(2.0) -
                       (f.s - 1) * std::log(2.0 * std::numbers::pi);
  std::vector<FsoCdfTerm> terms;
  for (int m = 1; m <= f.beta_o; ++m) {
    FsoCdfTerm t;
    t.weight = std::exp(log_k + lw.log_vartheta[m - 1] +
                        (f.alpha_o + m - 1.0) * std::log(static_cast<double>(f.s)));
    t.kernel.m = 3 * f.s;
    t.kernel.n = 1;
    t.kernel.a = {1.0};
    t.kernel.a.insert(t.kernel.a.end(), c.q1.begin(), c.q1.end());
    t.kernel.b = c.q2[m - 1];
    t.kernel.b.push_back(0.0);
    t.kernel.z = c.v / c.mu_s;
    terms.push_back(std::move(t));
  }
  return terms;
}

namespace {

// Past a million times the mean irradiance the tail mass is below e^{-1000}
// while the contour integral starts losing digits.
bool saturated(const FsoLinkParams& f, double normalized_snr) {
  return std::log(normalized_snr) > f.s * std::log(1e6);
}

}  // namespace

double malaga_pdf(const FsoLinkParams& f, double gamma,
                  const specfun::ContourPolicy& policy) {
  f.validate();
  if (!(gamma > 0.0)) throw DomainError("malaga_pdf requires gamma > 0");
  const FsoConstants c = fso_constants(f);
  const LogWeights lw = log_weights(f);
  const double e2 = f.epsilon * f.epsilon;
  if (saturated(f, gamma / c.mu_s)) return 0.0;
  const double arg = c.varpi * std::pow(gamma / c.mu_s, 1.0 / f.s);
  return with_context("malaga_pdf", [&] {
    double sum = 0.0;
    for (int m = 1; m <= f.beta_o; ++m) {
      specfun::MeijerGSpec g{3, 0, {e2 + 1.0}, {e2, f.alpha_o, static_cast<double>(m)}, arg};
      const double w = std::exp(std::log(e2) + lw.log_chi + lw.log_vartheta[m - 1] -
                                f.s * std::log(2.0) - std::log(gamma));
      sum += w * specfun::meijer_g(g, policy);
    }
    return std::max(sum, 0.0);
  });
}

double malaga_cdf(const FsoLinkParams& f, double gamma,
                  const specfun::ContourPolicy& policy) {
  f.validate();
  require_gamma(gamma, "malaga_cdf");
  if (gamma == 0.0) return 0.0;
  if (std::isinf(gamma) || saturated(f, gamma / electrical_snr(f))) return 1.0;
  return with_context("malaga_cdf", [&] {
    double sum = 0.0;
    for (auto& t : malaga_cdf_terms(f)) {
      t.kernel.z *= gamma;
      sum += t.weight * specfun::meijer_g(t.kernel, policy);
    }
    if (sum < -1e-7 || sum > 1.0 + 1e-7) {
      throw NumericalIntegrityError("malaga_cdf left [0, 1]: " + std::to_string(sum));
    }
    return std::clamp(sum, 0.0, 1.0);
  });
}

double fso_blocked_cdf(const FsoLinkParams& f, double gamma,
                       const specfun::ContourPolicy& policy) {
  f.validate();
  require_gamma(gamma, "fso_blocked_cdf");
  if (f.blockage_p == 1.0) return 1.0;
  return f.blockage_p + (1.0 - f.blockage_p) * malaga_cdf(f, gamma, policy);
}

}  // namespace hsec
