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

#ifndef HYBRID_SECRECY_CHANNELS_HPP
#define HYBRID_SECRECY_CHANNELS_HPP

#include "hybrid_secrecy/specfun.hpp"

#include <vector>

namespace hsec {

double db_to_linear(double db);
double linear_to_db(double linear);

/// One alpha-mu RF link. The average SNR is given in dB; everything else is
/// derived from it.
struct RfChannelParams {
  double alpha = 2.0;
  int mu = 1;
  double avg_snr_db = 0.0;

  /// Throws DomainError unless alpha > 0, mu >= 1 and the SNR is finite.
  void validate() const;

  double avg_snr() const { return db_to_linear(avg_snr_db); }
  /// alpha / 2
  double alpha_t() const { return 0.5 * alpha; }
  /// Phi^{-alpha/2}
  double delta() const;
  /// alpha mu / 2 - 1
  double theta() const { return alpha_t() * mu - 1.0; }
};

/// Malaga turbulence with pointing error, detection order and blockage.
struct FsoLinkParams {
  double alpha_o = 2.296;
  int beta_o = 2;
  double g = 2.0;
  double omega = 1.0;
  double epsilon = 1.0;
  int s = 1;
  double avg_snr_db = 10.0;
  double blockage_p = 0.0;

  void validate() const;
};

/// Constants of the Malaga PDF/CDF mixtures. Index k of the per-term
/// vectors corresponds to mixture index m = k + 1.
struct FsoConstants {
  double chi = 0.0;
  double varpi = 0.0;
  double k = 0.0;
  double v = 0.0;
  double mu_s = 0.0;
  std::vector<double> upsilon;
  std::vector<double> vartheta;
  std::vector<double> varsigma;
  std::vector<double> q1;
  /// Lower parameters q2 for every mixture term.
  std::vector<std::vector<double>> q2;
};

FsoConstants fso_constants(const FsoLinkParams& fso);

/// mu_1 = Phi_o for heterodyne detection, mu_2 for IM/DD.
double electrical_snr(const FsoLinkParams& fso);

double alpha_mu_pdf(const RfChannelParams& ch, double gamma);
/// Regularized lower incomplete gamma form.
double alpha_mu_cdf(const RfChannelParams& ch, double gamma);
/// Finite-sum form 1 - e^{-x} sum_{m<mu} x^m / m!.
double alpha_mu_cdf_sum(const RfChannelParams& ch, double gamma);

/// One weighted term  weight * G[kernel.z * gamma]  of the Malaga CDF.
struct FsoCdfTerm {
  double weight = 0.0;
  specfun::MeijerGSpec kernel;
};

/// Terms of the unblocked Malaga CDF; kernel.z holds the coefficient V / mu_s
/// of gamma.
std::vector<FsoCdfTerm> malaga_cdf_terms(const FsoLinkParams& fso);

double malaga_pdf(const FsoLinkParams& fso, double gamma,
                  const specfun::ContourPolicy& policy = {});
double malaga_cdf(const FsoLinkParams& fso, double gamma,
                  const specfun::ContourPolicy& policy = {});
/// P_o + (1 - P_o) malaga_cdf. The point mass at zero makes this 1 at
/// P_o = 1 and P_o at gamma = 0.
double fso_blocked_cdf(const FsoLinkParams& fso, double gamma,
                       const specfun::ContourPolicy& policy = {});

}  // namespace hsec

#endif  // HYBRID_SECRECY_CHANNELS_HPP
