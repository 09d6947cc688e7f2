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

#ifndef HYBRID_SECRECY_CUN_CDF_HPP
#define HYBRID_SECRECY_CUN_CDF_HPP

#include "hybrid_secrecy/model.hpp"
#include "hybrid_secrecy/specfun.hpp"

#include <vector>

namespace hsec {

/// Sum of a series together with how it was truncated.
struct SeriesReport {
  double value = 0.0;
  int terms = 0;
  /// Magnitude of the last accepted term, a proxy for the truncation error.
  double bound = 0.0;
};

// ---------------------------------------------------------------------------
// Scenario I: interference limit only
// ---------------------------------------------------------------------------

/// One m_r term of the Scenario I RF CDF
///   F(x) = 1 - sum_{m_r} coef x^{a_r m_r} J(x)
/// where
///   J(x) = (a_p / Gamma(k)) int_0^inf y^{Theta_p + a_r m_r}
///          e^{-delta_p y^{a_p} - Xi x^{a_r} y^{a_r}} dy,
/// which equals (delta_p + Xi x^{a_r})^{-k} when a_p = a_r and an H^{1,1}_{1,1}
/// function in x^{a_r} otherwise.
struct InterferenceTerm {
  int mr = 0;
  double coef = 0.0;
  /// (Theta_p + a_r m_r + 1) / a_p
  double k = 0.0;
  double delta_p = 0.0;
  /// Xi = delta_r Psi_Q^{-a_r}
  double xi = 0.0;
  /// a_r
  double exponent = 0.0;
  /// a_r / a_p
  double scale = 1.0;
};

std::vector<InterferenceTerm> interference_terms(const RfChannelParams& rf_sr,
                                                 const RfChannelParams& rf_sp,
                                                 const PowerConstraints& pc);

/// J(x) of one term.
double interference_factor(const InterferenceTerm& t, double x,
                           const specfun::ContourPolicy& policy = {});

/// J(x) as a Mellin-product kernel in the integration variable gamma, for
/// x = sigma * gamma. Returns the kernel (with weight) and the constant that
/// multiplies it.
specfun::PowerKernel interference_kernel(const InterferenceTerm& t, double sigma,
                                         double* prefactor);

/// Closed form for a_p = a_r; UnsupportedParameters otherwise.
double cdf_rf_scenario1(const RfChannelParams& rf_sr, const RfChannelParams& rf_sp,
                        const PowerConstraints& pc, double gamma);
/// Same CDF for arbitrary a_p, a_r via the H kernel.
double cdf_rf_scenario1_general(const RfChannelParams& rf_sr,
                                const RfChannelParams& rf_sp,
                                const PowerConstraints& pc, double gamma,
                                const specfun::ContourPolicy& policy = {});

/// F_RF * F_FSO,blocked.
double cdf_hybrid_scenario1(const SecrecyConfig& cfg, double gamma,
                            const specfun::ContourPolicy& policy = {});
/// The term-by-term expansion of the same product.
double cdf_hybrid_scenario1_expanded(const SecrecyConfig& cfg, double gamma,
                                     const specfun::ContourPolicy& policy = {});

// ---------------------------------------------------------------------------
// Scenario II: interference and transmit limits
// ---------------------------------------------------------------------------

/// Pr{|g_r|^2 <= gamma / Psi_T, Psi_Q / |g_p|^2 >= Psi_T}.
double lambda1(const RfChannelParams& rf_sr, const RfChannelParams& rf_sp,
               const PowerConstraints& pc, double gamma);

/// Pr{|g_r|^2 / |g_p|^2 <= gamma / Psi_Q, Psi_Q / |g_p|^2 <= Psi_T} in closed
/// form: the upper incomplete gamma of integer order is a finite sum, so no
/// truncation is involved. Requires a_p = a_r.
double lambda2(const RfChannelParams& rf_sr, const RfChannelParams& rf_sp,
               const PowerConstraints& pc, double gamma,
               const SeriesPolicy& sp = {});

/// lambda2 with (delta_p + Xi x^a)^{-Omega} expanded binomially (the m5
/// series). Converges only for Xi x^a < delta_p; throws ConvergenceError with
/// the partial sum otherwise or when max_terms is exhausted.
SeriesReport lambda2_series(const RfChannelParams& rf_sr,
                            const RfChannelParams& rf_sp,
                            const PowerConstraints& pc, double gamma,
                            const SeriesPolicy& sp = {});

double cdf_rf_scenario2(const RfChannelParams& rf_sr, const RfChannelParams& rf_sp,
                        const PowerConstraints& pc, double gamma,
                        const SeriesPolicy& sp = {});

double cdf_hybrid_scenario2(const SecrecyConfig& cfg, double gamma,
                            const SeriesPolicy& sp = {},
                            const specfun::ContourPolicy& policy = {});
/// Expanded form with the constant X = 1 + Xi5 - sum Xi1.
double cdf_hybrid_scenario2_expanded(const SecrecyConfig& cfg, double gamma,
                                     const SeriesPolicy& sp = {},
                                     const specfun::ContourPolicy& policy = {});

/// Constants of the Scenario II RF CDF
///   F(x) = X - sum_{m_r} xi2_r x^{a m_r} e^{-d0 x^a}
///            + sum_{m_p, m_r} xi3_{p,r} x^{a m_r} e^{-c_p - d0 x^a}
///            - sum_{m_r, m_3} e_{r,3} x^{a m_r} e^{-d0 x^a}
///                             (delta_p + xi x^a)^{m_3 - Omega_r}
struct Scenario2Constants {
  double a = 0.0;
  double delta_p = 0.0;
  double xi = 0.0;
  /// delta_r Psi_T^{-a}
  double d0 = 0.0;
  /// delta_p (Psi_Q / Psi_T)^a
  double c_p = 0.0;
  double x_const = 0.0;
  double xi5 = 0.0;
  std::vector<double> xi1;
  std::vector<double> xi2;
  /// xi3[m_p][m_r]
  std::vector<std::vector<double>> xi3;
  /// e[m_r][m_3], m_3 < mu_p + m_r
  std::vector<std::vector<double>> e;
};

Scenario2Constants scenario2_constants(const RfChannelParams& rf_sr,
                                       const RfChannelParams& rf_sp,
                                       const PowerConstraints& pc);

}  // namespace hsec

#endif  // HYBRID_SECRECY_CUN_CDF_HPP
