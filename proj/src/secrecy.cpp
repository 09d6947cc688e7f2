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
// Every term of the SOP lower bound is an integral
//   int_0^inf g^{rho-1} e^{-d_e g^{a_e}} prod_k h_k(w_k g^{c_k}) dg
// against the eavesdropper density, with at most three kernels: the Malaga
// CDF terms, the interference factor J and the transmit-limit exponential.
// specfun::mellin_product evaluates them as univariate or bivariate H
// functions; the rare three-kernel case falls back to adaptive quadrature.

#include "hybrid_secrecy/secrecy.hpp"

#include "hybrid_secrecy/detail/compensated_sum.hpp"
#include "hybrid_secrecy/errors.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace hsec {

std::string_view to_string(Metric metric) {
  switch (metric) {
    case Metric::kSopL:
      return "sop";
    case Metric::kSpsc:
      return "spsc";
    case Metric::kEst:
      return "est";
  }
  return "unknown";
}

namespace {

using specfun::FoxHSpec;
using specfun::MellinProduct;
using specfun::PowerKernel;

constexpr double kClampSlack = 1e-9;

bool is_plain_exponential(const FoxHSpec& h) {
  return h.m == 1 && h.n == 0 && h.a.empty() && h.b.size() == 1 &&
         h.b[0].value == 0.0 && h.b[0].scale == 1.0;
}

bool is_rational(const FoxHSpec& h) {
  return h.m == 1 && h.n == 1 && h.a.size() == 1 && h.b.size() == 1 &&
         h.b[0].value == 0.0 && h.b[0].scale == 1.0 && h.a[0].scale == 1.0;
}

double kernel_value(const PowerKernel& k, double g, const specfun::ContourPolicy& policy) {
  const double w = k.kernel.z * std::pow(g, k.exponent);
  if (is_plain_exponential(k.kernel)) return std::exp(-w);
  if (is_rational(k.kernel)) {
    const double kk = 1.0 - k.kernel.a[0].value;
    return std::exp(std::lgamma(kk) - kk * std::log1p(w));
  }
  if (w == 0.0) return 0.0;
  FoxHSpec h = k.kernel;
  h.z = w;
  return specfun::fox_h(h, policy);
}

specfun::MellinProductReport quadrature_product(const MellinProduct& in,
                                                const specfun::ContourPolicy& policy) {
  boost::math::quadrature::exp_sinh<double> integrator;
  auto f = [&](double g) {
    if (g <= 0.0) return 0.0;
    double v = std::exp((in.rho - 1.0) * std::log(g) - in.decay * std::pow(g, in.power));
    if (v == 0.0) return 0.0;
    for (const auto& k : in.kernels) v *= kernel_value(k, g, policy);
    return v;
  };
  double err = 0.0;
  double l1 = 0.0;
  // Rescale so the bulk of the density sits near g = 1.
  const double scale = std::pow(in.decay, -1.0 / in.power);
  auto scaled = [&](double t) { return scale * f(scale * t); };
  const double value = integrator.integrate(scaled, policy.tolerance, &err, &l1);
  return {value, err};
}

struct Term {
  double value = 0.0;
  double error = 0.0;
};

class Assembler {
 public:
  Assembler(const SecrecyConfig& cfg, const specfun::ContourPolicy& policy)
      : cfg_(cfg), policy_(policy), sigma_(cfg.sigma()) {
    cfg_.validate();
    ae_ = cfg.rf_se.alpha_t();
    de_ = cfg.rf_se.delta();
    the_ = cfg.rf_se.theta();
    log_kappa_e_ = std::log(ae_) + cfg.rf_se.mu * std::log(de_) - std::lgamma(cfg.rf_se.mu);
    for (const auto& t : malaga_cdf_terms(cfg.fso)) {
      fso_weight_.push_back(t.weight);
      FoxHSpec h = FoxHSpec::from_meijer(t.kernel);
      h.z *= sigma_;
      fso_kernel_.push_back({h, 1.0});
    }
  }

  double sigma() const { return sigma_; }
  double kappa_e() const { return std::exp(log_kappa_e_); }
  int fso_terms() const { return static_cast<int>(fso_kernel_.size()); }
  double fso_weight(int o) const { return fso_weight_[o]; }
  const PowerKernel& fso_kernel(int o) const { return fso_kernel_[o]; }

  /// int g^{rho-1} e^{-d_e g^{a_e}} prod kernels dg
  Term integral(double rho, std::vector<PowerKernel> kernels) const {
    MellinProduct mp{rho, de_, ae_, std::move(kernels)};
    specfun::MellinProductReport rep;
    try {
      rep = specfun::mellin_product_report(mp, policy_);
    } catch (const UnsupportedParameters&) {
      rep = quadrature_product(mp, policy_);
    }
    ++evaluated_;
    return {rep.value, rep.error_estimate};
  }

  double im1() const {
    const double r = (the_ + 1.0) / ae_;
    return std::exp(std::lgamma(r) - std::log(ae_) - r * std::log(de_));
  }

  double theta_e() const { return the_; }
  int evaluated() const { return evaluated_; }

 private:
  SecrecyConfig cfg_;
  specfun::ContourPolicy policy_;
  double sigma_;
  double ae_ = 0.0;
  double de_ = 0.0;
  double the_ = 0.0;
  double log_kappa_e_ = 0.0;
  std::vector<double> fso_weight_;
  std::vector<PowerKernel> fso_kernel_;
  mutable int evaluated_ = 0;
};

SecrecyResult finish(double value, double error_bound, int terms, Scenario scenario,
                     const char* what) {
  SecrecyResult r;
  r.metric = Metric::kSopL;
  r.scenario = scenario;
  r.terms = terms;
  r.truncation_bound = error_bound;
  const double slack = kClampSlack + 10.0 * error_bound;
  if (!(value >= -slack && value <= 1.0 + slack)) {
    std::ostringstream msg;
    msg << what << " = " << value << " lies outside [0, 1] beyond the error bound "
        << error_bound;
    throw NumericalIntegrityError(msg.str());
  }
  r.clamped = value < 0.0 || value > 1.0;
  r.value = std::clamp(value, 0.0, 1.0);
  return r;
}

void require_common_alpha(const SecrecyConfig& cfg) {
  if (std::abs(cfg.rf_sr.alpha - cfg.rf_sp.alpha) >
      1e-12 * std::max(cfg.rf_sr.alpha, cfg.rf_sp.alpha)) {
    std::ostringstream msg;
    msg << "Scenario II needs alpha_p = alpha_r (got alpha_p=" << cfg.rf_sp.alpha
        << ", alpha_r=" << cfg.rf_sr.alpha << ")";
    throw UnsupportedParameters(msg.str());
  }
}

// Pieces shared by r_terms and the Scenario II assembly.
struct Scenario2Setup {
  Scenario2Constants c;
  double big_d = 0.0;
  double beta = 0.0;
};

Scenario2Setup scenario2_setup(const SecrecyConfig& cfg, double sigma) {
  require_common_alpha(cfg);
  Scenario2Setup s;
  s.c = scenario2_constants(cfg.rf_sr, cfg.rf_sp, cfg.pc);
  const double sa = std::pow(sigma, s.c.a);
  s.big_d = s.c.d0 * sa;
  s.beta = s.c.xi * sa / s.c.delta_p;
  return s;
}

PowerKernel transmit_kernel(const Scenario2Setup& s) {
  return {specfun::exp_kernel(s.big_d), s.c.a};
}

// (delta_p + Xi sigma^a g^a)^{-j} = pref * H kernel
PowerKernel p2_kernel(const Scenario2Setup& s, int j, double* pref) {
  *pref = std::exp(-j * std::log(s.c.delta_p) - std::lgamma(j));
  return {specfun::rational_kernel(j, s.beta), s.c.a};
}

}  // namespace

// ---------------------------------------------------------------------------
// Scenario I
// ---------------------------------------------------------------------------

ImTerms im_terms(const SecrecyConfig& cfg, const SeriesPolicy& sp,
                 const specfun::ContourPolicy& policy) {
  sp.validate();
  const Assembler as(cfg, policy);
  const auto terms = interference_terms(cfg.rf_sr, cfg.rf_sp, cfg.pc);
  const int nr = static_cast<int>(terms.size());
  const int no = as.fso_terms();
  const double th = as.theta_e();

  ImTerms out;
  out.im1 = as.im1();
  out.im2.resize(no);
  out.im3.resize(nr);
  out.im4.resize(nr, no);
  for (int o = 0; o < no; ++o) out.im2(o) = as.integral(th + 1.0, {as.fso_kernel(o)}).value;
  for (int r = 0; r < nr; ++r) {
    double pref = 0.0;
    const PowerKernel j = interference_kernel(terms[r], as.sigma(), &pref);
    const double rho = th + terms[r].exponent * terms[r].mr + 1.0;
    out.im3(r) = pref * as.integral(rho, {j}).value;
    for (int o = 0; o < no; ++o) {
      out.im4(r, o) = pref * as.integral(rho, {j, as.fso_kernel(o)}).value;
    }
  }
  return out;
}

SeriesReport im3_series(const SecrecyConfig& cfg, int mr, const SeriesPolicy& sp) {
  sp.validate();
  cfg.validate();
  const auto terms = interference_terms(cfg.rf_sr, cfg.rf_sp, cfg.pc);
  if (mr < 0 || mr >= static_cast<int>(terms.size())) {
    throw DomainError("im3_series: m_r out of range");
  }
  if (terms[mr].scale != 1.0) {
    throw UnsupportedParameters("im3_series needs alpha_p = alpha_r");
  }
  const InterferenceTerm& t = terms[mr];
  const double a = t.exponent;
  const double ae = cfg.rf_se.alpha_t();
  const double de = cfg.rf_se.delta();
  const double th = cfg.rf_se.theta();
  // x = Xi sigma^a / delta_p; term m2 is
  //   binom(k + m2 - 1, m2) (-x)^{m2} delta_p^{-k}
  //   Gamma(c_{m2}) / a_e  d_e^{-c_{m2}},  c_{m2} = (Th_e + a m_r + a m2 + 1) / a_e
  const double log_x = std::log(t.xi) + a * std::log(cfg.sigma()) - std::log(t.delta_p);
  detail::CompensatedSum sum(sp.compensated);
  SeriesReport rep;
  int small = 0;
  double prev_abs = 0.0;
  int growing = 0;
  for (int m2 = 0; m2 < sp.max_terms; ++m2) {
    const double c = (th + a * t.mr + a * m2 + 1.0) / ae;
    const double log_abs = std::lgamma(t.k + m2) - std::lgamma(t.k) - std::lgamma(m2 + 1.0) +
                           m2 * log_x - t.k * std::log(t.delta_p) + std::lgamma(c) -
                           std::log(ae) - c * std::log(de);
    const double term = (m2 % 2 == 0 ? 1.0 : -1.0) * std::exp(log_abs);
    const double before = sum.value();
    sum.add(term);
    rep.terms = m2 + 1;
    rep.bound = std::abs(term);
    if (m2 > 0 && std::abs(term) > prev_abs) {
      if (++growing >= 5) {
        std::ostringstream msg;
        msg << "I3 binomial series diverges (terms grow from m2=" << m2 - 4 << ")";
        throw ConvergenceError(msg.str(), sum.value(), before);
      }
    } else {
      growing = 0;
    }
    prev_abs = std::abs(term);
    if (std::abs(term) <= sp.tolerance * std::abs(sum.value())) {
      if (++small >= 3) {
        rep.value = sum.value();
        return rep;
      }
    } else {
      small = 0;
    }
  }
  throw ConvergenceError("I3 binomial series did not converge within max_terms",
                         sum.value(), sum.value() - rep.bound);
}

SecrecyResult sop_lower_scenario1(const SecrecyConfig& cfg, const SeriesPolicy& sp,
                                  const specfun::ContourPolicy& policy) {
  sp.validate();
  const Assembler as(cfg, policy);
  const auto terms = interference_terms(cfg.rf_sr, cfg.rf_sp, cfg.pc);
  const double po = cfg.fso.blockage_p;
  const double ke = as.kappa_e();
  const double th = as.theta_e();
  const double sigma = as.sigma();

  detail::CompensatedSum total(sp.compensated);
  double err = 0.0;
  total.add(po * ke * as.im1());
  if (po < 1.0) {
    for (int o = 0; o < as.fso_terms(); ++o) {
      const Term t = as.integral(th + 1.0, {as.fso_kernel(o)});
      const double w = (1.0 - po) * as.fso_weight(o) * ke;
      total.add(w * t.value);
      err += std::abs(w) * t.error;
    }
  }
  for (const auto& it : terms) {
    double pref = 0.0;
    const PowerKernel j = interference_kernel(it, sigma, &pref);
    const double rho = th + it.exponent * it.mr + 1.0;
    const double xi5 = it.coef * std::pow(sigma, it.exponent * it.mr) * ke * pref;
    if (po > 0.0) {
      const Term t = as.integral(rho, {j});
      total.add(-po * xi5 * t.value);
      err += std::abs(po * xi5) * t.error;
    }
    if (po < 1.0) {
      for (int o = 0; o < as.fso_terms(); ++o) {
        const Term t = as.integral(rho, {j, as.fso_kernel(o)});
        const double w = (1.0 - po) * as.fso_weight(o) * xi5;
        total.add(-w * t.value);
        err += std::abs(w) * t.error;
      }
    }
  }
  return finish(total.value(), err, as.evaluated(), Scenario::kI, "SOP_L (Scenario I)");
}

// ---------------------------------------------------------------------------
// Scenario II
// ---------------------------------------------------------------------------

RTerms r_terms(const SecrecyConfig& cfg, const SeriesPolicy& sp,
               const specfun::ContourPolicy& policy) {
  sp.validate();
  const Assembler as(cfg, policy);
  const Scenario2Setup s = scenario2_setup(cfg, as.sigma());
  const double a = s.c.a;
  const double th = as.theta_e();
  const int mu_r = cfg.rf_sr.mu;
  const int mu_p = cfg.rf_sp.mu;
  const int n_max = 2 * mu_r + mu_p - 3;
  const int no = as.fso_terms();

  RTerms out;
  out.r1 = as.im1();
  out.r2.resize(n_max + 1);
  out.r5.resize(no);
  out.r6.resize(n_max + 1, no);
  for (int n = 0; n <= n_max; ++n) {
    out.r2(n) = as.integral(a * n + th + 1.0, {transmit_kernel(s)}).value;
    for (int o = 0; o < no; ++o) {
      out.r6(n, o) =
          as.integral(a * n + th + 1.0, {transmit_kernel(s), as.fso_kernel(o)}).value;
    }
  }
  for (int o = 0; o < no; ++o) out.r5(o) = as.integral(th + 1.0, {as.fso_kernel(o)}).value;
  for (int mr = 0; mr < mu_r; ++mr) {
    const int omega = mu_p + mr;
    std::vector<double> row4;
    std::vector<Eigen::VectorXd> row8;
    for (int m3 = 0; m3 < omega; ++m3) {
      double pref = 0.0;
      const PowerKernel k = p2_kernel(s, omega - m3, &pref);
      const double rho = a * mr + th + 1.0;
      row4.push_back(pref * as.integral(rho, {transmit_kernel(s), k}).value);
      Eigen::VectorXd v(no);
      for (int o = 0; o < no; ++o) {
        v(o) = pref * as.integral(rho, {transmit_kernel(s), k, as.fso_kernel(o)}).value;
      }
      row8.push_back(std::move(v));
    }
    out.r4_sum.push_back(std::move(row4));
    out.r8_sum.push_back(std::move(row8));
  }
  return out;
}

SecrecyResult sop_lower_scenario2(const SecrecyConfig& cfg, const SeriesPolicy& sp,
                                  const specfun::ContourPolicy& policy) {
  sp.validate();
  if (cfg.pc.scenario != Scenario::kII && !cfg.pc.psi_t_db) {
    throw DomainError("Scenario II needs a transmit limit psi_t_db");
  }
  const Assembler as(cfg, policy);
  const Scenario2Setup s = scenario2_setup(cfg, as.sigma());
  const double a = s.c.a;
  const double th = as.theta_e();
  const double sigma = as.sigma();
  const double po = cfg.fso.blockage_p;
  const double ke = as.kappa_e();
  const int mu_r = cfg.rf_sr.mu;
  const int mu_p = cfg.rf_sp.mu;
  const int no = as.fso_terms();

  // Coefficient of each R2/R6 term: -Xi2 sigma^{a m_r} + sum_mp Xi3 sigma^{a m_r} e^{-c_p}.
  std::vector<double> rf_coef(mu_r);
  for (int mr = 0; mr < mu_r; ++mr) {
    double c3 = 0.0;
    for (int mp = 0; mp < mu_p; ++mp) c3 += s.c.xi3[mp][mr];
    rf_coef[mr] = (-s.c.xi2[mr] + c3 * std::exp(-s.c.c_p)) * std::pow(sigma, a * mr);
  }

  detail::CompensatedSum total(sp.compensated);
  double err = 0.0;
  auto add = [&](double weight, const Term& t) {
    total.add(weight * t.value);
    err += std::abs(weight) * t.error;
  };

  // Blocked FSO: only the RF CDF survives.
  if (po > 0.0) {
    total.add(po * ke * s.c.x_const * as.im1());
    for (int mr = 0; mr < mu_r; ++mr) {
      add(po * ke * rf_coef[mr], as.integral(a * mr + th + 1.0, {transmit_kernel(s)}));
    }
    for (int mr = 0; mr < mu_r; ++mr) {
      const int omega = mu_p + mr;
      for (int m3 = 0; m3 < omega; ++m3) {
        double pref = 0.0;
        const PowerKernel k = p2_kernel(s, omega - m3, &pref);
        const double w = -po * ke * s.c.e[mr][m3] * std::pow(sigma, a * mr) * pref;
        add(w, as.integral(a * mr + th + 1.0, {transmit_kernel(s), k}));
      }
    }
  }
  if (po < 1.0) {
    for (int o = 0; o < no; ++o) {
      const double wo = (1.0 - po) * ke * as.fso_weight(o);
      add(wo * s.c.x_const, as.integral(th + 1.0, {as.fso_kernel(o)}));
      for (int mr = 0; mr < mu_r; ++mr) {
        add(wo * rf_coef[mr],
            as.integral(a * mr + th + 1.0, {transmit_kernel(s), as.fso_kernel(o)}));
      }
      for (int mr = 0; mr < mu_r; ++mr) {
        const int omega = mu_p + mr;
        for (int m3 = 0; m3 < omega; ++m3) {
          double pref = 0.0;
          const PowerKernel k = p2_kernel(s, omega - m3, &pref);
          const double w = -wo * s.c.e[mr][m3] * std::pow(sigma, a * mr) * pref;
          add(w, as.integral(a * mr + th + 1.0, {transmit_kernel(s), k, as.fso_kernel(o)}));
        }
      }
    }
  }
  return finish(total.value(), err, as.evaluated(), Scenario::kII, "SOP_L (Scenario II)");
}

SecrecyResult sop_lower(const SecrecyConfig& cfg, const SeriesPolicy& sp,
                        const specfun::ContourPolicy& policy) {
  return cfg.pc.scenario == Scenario::kI ? sop_lower_scenario1(cfg, sp, policy)
                                         : sop_lower_scenario2(cfg, sp, policy);
}

SecrecyResult spsc(const SecrecyConfig& cfg, const SeriesPolicy& sp,
                   const specfun::ContourPolicy& policy) {
  SecrecyConfig zero = cfg;
  zero.target_rate = 0.0;
  SecrecyResult r = sop_lower(zero, sp, policy);
  r.metric = Metric::kSpsc;
  r.value = 1.0 - r.value;
  return r;
}

SecrecyResult est(const SecrecyConfig& cfg, const SeriesPolicy& sp,
                  const specfun::ContourPolicy& policy) {
  SecrecyResult r = sop_lower(cfg, sp, policy);
  r.metric = Metric::kEst;
  r.value = cfg.target_rate * (1.0 - r.value);
  return r;
}

SecrecyResult evaluate(const SecrecyConfig& cfg, Metric metric, const SeriesPolicy& sp,
                       const specfun::ContourPolicy& policy) {
  switch (metric) {
    case Metric::kSopL:
      return sop_lower(cfg, sp, policy);
    case Metric::kSpsc:
      return spsc(cfg, sp, policy);
    case Metric::kEst:
      return est(cfg, sp, policy);
  }
  throw DomainError("unknown metric");
}

}  // namespace hsec
