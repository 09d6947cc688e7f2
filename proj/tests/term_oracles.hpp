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
// Term-by-term quadrature of the integrals behind the SOP bound, straight
// from their definitions (see ImTerms and RTerms). The Malaga factor G_o and
// the interference factor J_r are evaluated pointwise.

#ifndef HYBRID_SECRECY_TESTS_TERM_ORACLES_HPP
#define HYBRID_SECRECY_TESTS_TERM_ORACLES_HPP

#include "hybrid_secrecy/channels.hpp"
#include "hybrid_secrecy/cun_cdf.hpp"
#include "hybrid_secrecy/secrecy.hpp"
#include "oracles.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

class TermOracle {
 public:
  /// `tol` is the quadrature tolerance of every term.
  explicit TermOracle(const hsec::SecrecyConfig& cfg, double tol = 1e-11)
      : cfg_(cfg),
        tol_(tol),
        sigma_(cfg.sigma()),
        ae_(cfg.rf_se.alpha_t()),
        de_(cfg.rf_se.delta()),
        th_(cfg.rf_se.theta()),
        fso_(hsec::malaga_cdf_terms(cfg.fso)) {}

  int fso_terms() const { return static_cast<int>(fso_.size()); }

  /// int g^{Th_e + extra} e^{-d_e g^{a_e}} f(g) dg
  double eve(double extra, const std::function<double(double)>& f) const {
    const double scale = std::pow(de_, -1.0 / ae_);
    return integrate_half_line(
        [&](double g) {
          const double w = std::exp((th_ + extra) * std::log(g) - de_ * std::pow(g, ae_));
          return w == 0.0 ? 0.0 : w * f(g);
        },
        scale, tol_);
  }

  /// G_o(V sigma g / mu_s). Every term integrates over the same nodes, so
  /// values are memoized.
  double g_kernel(int o, double g) const {
    const auto key = std::make_pair(o, g);
    if (auto it = g_cache_.find(key); it != g_cache_.end()) return it->second;
    hsec::specfun::MeijerGSpec k = fso_[o].kernel;
    k.z *= sigma_ * g;
    return g_cache_[key] = hsec::specfun::meijer_g(k);
  }

  double im1() const {
    return eve(0.0, [](double) { return 1.0; });
  }
  double im2(int o) const {
    return eve(0.0, [&](double g) { return g_kernel(o, g); });
  }
  double im3(const hsec::InterferenceTerm& t) const {
    return eve(t.exponent * t.mr, [&](double g) { return interference(t, g); });
  }
  double im4(const hsec::InterferenceTerm& t, int o) const {
    return eve(t.exponent * t.mr, [&](double g) {
      return interference(t, g) * g_kernel(o, g);
    });
  }

  // Scenario II pieces; requires alpha_p = alpha_r.
  double r2(const hsec::Scenario2Constants& c, int n) const {
    const double d = c.d0 * std::pow(sigma_, c.a);
    return eve(c.a * n, [&](double g) { return std::exp(-d * std::pow(g, c.a)); });
  }
  double r6(const hsec::Scenario2Constants& c, int n, int o) const {
    const double d = c.d0 * std::pow(sigma_, c.a);
    return eve(c.a * n,
               [&](double g) { return std::exp(-d * std::pow(g, c.a)) * g_kernel(o, g); });
  }
  double r4_sum(const hsec::Scenario2Constants& c, int mr, int j) const {
    return eve(c.a * mr, [&](double g) { return p2(c, g, j); });
  }
  double r8_sum(const hsec::Scenario2Constants& c, int mr, int j, int o) const {
    return eve(c.a * mr, [&](double g) { return p2(c, g, j) * g_kernel(o, g); });
  }

 private:
  double interference(const hsec::InterferenceTerm& t, double g) const {
    const auto key = std::make_pair(static_cast<const void*>(&t), g);
    if (auto it = j_cache_.find(key); it != j_cache_.end()) return it->second;
    return j_cache_[key] = hsec::interference_factor(t, sigma_ * g);
  }

  // e^{-D g^a} (delta_p + Xi sigma^a g^a)^{-j}
  double p2(const hsec::Scenario2Constants& c, double g, int j) const {
    const double xa = std::pow(sigma_ * g, c.a);
    return std::exp(-c.d0 * xa - j * std::log(c.delta_p + c.xi * xa));
  }

  hsec::SecrecyConfig cfg_;
  double tol_;
  double sigma_;
  double ae_;
  double de_;
  double th_;
  std::vector<hsec::FsoCdfTerm> fso_;
  mutable std::map<std::pair<int, double>, double> g_cache_;
  mutable std::map<std::pair<const void*, double>, double> j_cache_;
};

}  // namespace oracle

#endif  // HYBRID_SECRECY_TESTS_TERM_ORACLES_HPP
