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

#ifndef HYBRID_SECRECY_SECRECY_HPP
#define HYBRID_SECRECY_SECRECY_HPP

#include "hybrid_secrecy/cun_cdf.hpp"
#include "hybrid_secrecy/model.hpp"
#include "hybrid_secrecy/specfun.hpp"

#include <Eigen/Core>

#include <string_view>

namespace hsec {

enum class Metric { kSopL, kSpsc, kEst };

std::string_view to_string(Metric metric);

struct SecrecyResult {
  double value = 0.0;
  Metric metric = Metric::kSopL;
  Scenario scenario = Scenario::kI;
  /// Number of integral terms assembled.
  int terms = 0;
  /// Sum of |weight| * quadrature error estimate over all terms.
  double truncation_bound = 0.0;
  /// True when roundoff pushed the value slightly outside [0, 1].
  bool clamped = false;
};

/// Integral terms of the Scenario I bound. Rows index m_r, columns the
/// Malaga mixture term (m_o - 1).
///   I1       = int g^{Th_e} e^{-d_e g^{a_e}} dg
///   I2[o]    = int g^{Th_e} e^{-d_e g^{a_e}} G_o(V sigma g / mu_s) dg
///   I3[r]    = int g^{Th_e + a_r m_r} e^{-d_e g^{a_e}} J_r(sigma g) dg
///   I4[r, o] = int g^{Th_e + a_r m_r} e^{-d_e g^{a_e}} J_r(sigma g)
///                  G_o(V sigma g / mu_s) dg
/// with J_r from InterferenceTerm.
struct ImTerms {
  double im1 = 0.0;
  Eigen::VectorXd im2;
  Eigen::VectorXd im3;
  Eigen::MatrixXd im4;
};

ImTerms im_terms(const SecrecyConfig& cfg, const SeriesPolicy& sp = {},
                 const specfun::ContourPolicy& policy = {});

/// I3 for m_r by the binomial series of (delta_p + Xi sigma^a g^a)^{-k}
/// integrated termwise. The termwise series is asymptotic: it is usable only
/// when Xi sigma^a / delta_p is small enough for the tolerance to be met
/// before the terms start to grow. ConvergenceError with the partial sums
/// otherwise.
SeriesReport im3_series(const SecrecyConfig& cfg, int mr, const SeriesPolicy& sp = {});

/// Integral terms of the Scenario II bound, a = a_r = a_p,
/// D = delta_r Psi_T^{-a} sigma^a:
///   R1          = I1
///   R2[n]       = int g^{a n + Th_e} e^{-D g^a - d_e g^{a_e}} dg   (= R3, = R4)
///   R5[o]       = I2[o]
///   R6[n, o]    = R2[n] integrand times G_o(V sigma g / mu_s)      (= R7, = R8)
///   R4sum[r][3] = int g^{a m_r + Th_e} e^{-D g^a}
///                     (delta_p + Xi sigma^a g^a)^{m_3 - Omega} e^{-d_e g^{a_e}} dg
///   R8sum[r][3][o] = R4sum integrand times G_o(V sigma g / mu_s)
/// n runs over every power index the expanded CDF produces with m5 = 0,
/// i.e. 0 .. 2 mu_r + mu_p - 3.
struct RTerms {
  double r1 = 0.0;
  Eigen::VectorXd r2;
  Eigen::VectorXd r5;
  Eigen::MatrixXd r6;
  std::vector<std::vector<double>> r4_sum;
  std::vector<std::vector<Eigen::VectorXd>> r8_sum;
};

RTerms r_terms(const SecrecyConfig& cfg, const SeriesPolicy& sp = {},
               const specfun::ContourPolicy& policy = {});

SecrecyResult sop_lower_scenario1(const SecrecyConfig& cfg, const SeriesPolicy& sp = {},
                                  const specfun::ContourPolicy& policy = {});
SecrecyResult sop_lower_scenario2(const SecrecyConfig& cfg, const SeriesPolicy& sp = {},
                                  const specfun::ContourPolicy& policy = {});
/// Dispatches on cfg.pc.scenario.
SecrecyResult sop_lower(const SecrecyConfig& cfg, const SeriesPolicy& sp = {},
                        const specfun::ContourPolicy& policy = {});
/// 1 - SOP_L evaluated with the target rate pinned to 0.
SecrecyResult spsc(const SecrecyConfig& cfg, const SeriesPolicy& sp = {},
                   const specfun::ContourPolicy& policy = {});
/// target_rate * (1 - SOP_L).
SecrecyResult est(const SecrecyConfig& cfg, const SeriesPolicy& sp = {},
                  const specfun::ContourPolicy& policy = {});

SecrecyResult evaluate(const SecrecyConfig& cfg, Metric metric,
                       const SeriesPolicy& sp = {},
                       const specfun::ContourPolicy& policy = {});

}  // namespace hsec

#endif  // HYBRID_SECRECY_SECRECY_HPP
