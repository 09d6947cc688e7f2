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
//
// Reference operating points used by the acceptance suite. Unless noted:
// alpha_o = 2.296, beta_o = 2, g = 2, Omega = 1, epsilon = 1, s = 1 and a
// target rate of 0.05 bits/s/Hz.

#ifndef HYBRID_SECRECY_TESTS_OPERATING_POINTS_HPP
#define HYBRID_SECRECY_TESTS_OPERATING_POINTS_HPP

#include "hybrid_secrecy/channels.hpp"
#include "hybrid_secrecy/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace oppoint {

struct Named {
  std::string name;
  hsec::SecrecyConfig cfg;
};

inline hsec::SecrecyConfig rf(double alpha, int mu, double phi_r, double phi_p, double phi_e) {
  hsec::SecrecyConfig c;
  c.rf_sr = {alpha, mu, phi_r};
  c.rf_sp = {alpha, mu, phi_p};
  c.rf_se = {alpha, mu, phi_e};
  c.target_rate = 0.05;
  return c;
}

inline void interference_only(hsec::SecrecyConfig& c, double psi_q) {
  c.pc = {psi_q, std::nullopt, hsec::Scenario::kI};
}

inline void both_limits(hsec::SecrecyConfig& c, double psi_q, double psi_t) {
  c.pc = {psi_q, psi_t, hsec::Scenario::kII};
}

// Heterodyne link with general alpha on the interference and eavesdropper
// hops; phi_e sits 5 dB below the FSO electrical SNR.
inline hsec::SecrecyConfig im_dd_general_alpha(double alpha_pe) {
  hsec::SecrecyConfig c = rf(2.0, 2, 15.0, 10.0, 0.0);
  c.rf_sp.alpha = alpha_pe;
  c.rf_se.alpha = alpha_pe;
  c.fso.s = 2;
  c.fso.blockage_p = 0.5;
  c.fso.avg_snr_db = 10.0;
  c.rf_se.avg_snr_db = hsec::linear_to_db(hsec::electrical_snr(c.fso)) - 5.0;
  interference_only(c, 10.0);
  return c;
}

inline std::vector<Named> all() {
  std::vector<Named> out;
  out.push_back({"imdd_alpha5", im_dd_general_alpha(5.0)});
  out.push_back({"imdd_alpha2", im_dd_general_alpha(2.0)});
  {
    hsec::SecrecyConfig c = rf(5.0, 6, 15.0, 15.0, 0.0);
    c.rf_sr.alpha = 2.0;
    c.fso.s = 2;
    c.fso.blockage_p = 0.5;
    interference_only(c, 15.0);
    out.push_back({"imdd_mu6_strong_eve_gap", c});
  }
  {
    hsec::SecrecyConfig c = rf(2.0, 2, 15.0, 10.0, 10.0);
    c.fso.avg_snr_db = 12.0;
    c.fso.blockage_p = 0.1;
    interference_only(c, -5.0);
    out.push_back({"hd_phi_o12", c});
  }
  {
    hsec::SecrecyConfig c = rf(2.0, 2, 15.0, 10.0, 10.0);
    c.fso.blockage_p = 0.1;
    interference_only(c, 0.0);
    out.push_back({"hd_base", c});
  }
  {
    hsec::SecrecyConfig c = rf(2.0, 2, 15.0, 15.0, 15.0);
    c.fso.blockage_p = 0.1;
    interference_only(c, -5.0);
    out.push_back({"hd_strong_pu", c});
  }
  {
    hsec::SecrecyConfig c = rf(2.0, 2, -5.0, -5.0, 5.0);
    c.fso.epsilon = 6.7;
    c.fso.blockage_p = 0.2;
    both_limits(c, 5.0, 10.0);
    out.push_back({"two_limits_low_snr", c});
  }
  {
    hsec::SecrecyConfig c = rf(2.0, 6, 15.0, 15.0, -5.0);
    c.fso.blockage_p = 0.2;
    interference_only(c, -10.0);
    out.push_back({"hd_mu6", c});
  }
  {
    hsec::SecrecyConfig c = rf(2.0, 2, 10.0, 0.0, -5.0);
    c.fso.s = 2;
    c.fso.epsilon = 6.7;
    c.fso.avg_snr_db = -5.0;
    c.fso.blockage_p = 0.1;
    both_limits(c, -10.0, 15.0);
    out.push_back({"two_limits_imdd", c});
  }
  {
    hsec::SecrecyConfig c = rf(2.0, 6, 15.0, 15.0, -5.0);
    c.fso.epsilon = 6.7;
    c.fso.alpha_o = 4.2;
    c.fso.beta_o = 3;
    c.fso.blockage_p = 0.1;
    both_limits(c, -10.0, -10.0);
    out.push_back({"two_limits_moderate", c});
  }
  {
    hsec::SecrecyConfig c = rf(2.0, 6, 15.0, 15.0, -5.0);
    c.fso.s = 2;
    c.fso.alpha_o = 8.0;
    c.fso.beta_o = 4;
    c.fso.blockage_p = 0.1;
    interference_only(c, -10.0);
    out.push_back({"imdd_weak", c});
  }
  {
    hsec::SecrecyConfig c = rf(2.0, 6, 15.0, 15.0, -5.0);
    c.fso.s = 2;
    c.fso.epsilon = 2.0;
    c.fso.blockage_p = 0.1;
    interference_only(c, -10.0);
    out.push_back({"imdd_pointing2", c});
  }
  return out;
}

}  // namespace oppoint

#endif  // HYBRID_SECRECY_TESTS_OPERATING_POINTS_HPP
