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

#ifndef HYBRID_SECRECY_MODEL_HPP
#define HYBRID_SECRECY_MODEL_HPP

#include "hybrid_secrecy/channels.hpp"

#include <optional>

namespace hsec {

enum class Scenario { kI = 1, kII = 2 };

/// Interference limit Psi_Q and, for Scenario II, the transmit limit Psi_T,
/// both normalized by the noise power and given in dB.
struct PowerConstraints {
  double psi_q_db = 0.0;
  std::optional<double> psi_t_db;
  Scenario scenario = Scenario::kI;

  void validate() const;
  double psi_q() const { return db_to_linear(psi_q_db); }
  /// Throws DomainError when no transmit limit is set.
  double psi_t() const;
};

/// Truncation of the infinite sums that appear in the series forms.
struct SeriesPolicy {
  double tolerance = 1e-8;
  int max_terms = 200;
  bool compensated = true;

  void validate() const;
};

struct SecrecyConfig {
  RfChannelParams rf_sr;
  RfChannelParams rf_sp;
  RfChannelParams rf_se;
  FsoLinkParams fso;
  PowerConstraints pc;
  /// Target secrecy rate in bits/s/Hz.
  double target_rate = 0.05;

  void validate() const;
  /// 2^{target_rate}
  double sigma() const;
};

}  // namespace hsec

#endif  // HYBRID_SECRECY_MODEL_HPP
