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
// With y = decay * x^power the integral becomes
//   (1/power) decay^{-rho/power} int y^{rho/power - 1} e^{-y}
//       prod_k h_k(w_k decay^{-c_k/power} y^{c_k/power}) dy
// and inserting the Mellin–Barnes form of every h_k leaves
//   Gamma(rho/power - sum_k (c_k/power) s_k)
// as the only coupling between the contour variables.

#include "hybrid_secrecy/errors.hpp"
#include "hybrid_secrecy/specfun.hpp"

#include <cmath>
#include <string>

namespace hsec::specfun {

namespace {

bool is_plain_exponential(const FoxHSpec& h) {
  return h.m == 1 && h.n == 0 && h.a.empty() && h.b.size() == 1 &&
         h.b[0].value == 0.0 && h.b[0].scale == 1.0;
}

void validate_product(const MellinProduct& in) {
  if (!(in.power > 0.0) || !std::isfinite(in.power)) {
    throw DomainError("Mellin product needs a positive power");
  }
  if (!(in.decay > 0.0) || !std::isfinite(in.decay)) {
    throw DomainError("Mellin product needs a positive decay rate");
  }
  if (!std::isfinite(in.rho)) throw DomainError("Mellin product needs finite rho");
  for (const auto& k : in.kernels) {
    if (!(k.exponent > 0.0) || !std::isfinite(k.exponent)) {
      throw DomainError("Mellin product kernels need positive exponents");
    }
  }
}

}  // namespace

MellinProductReport mellin_product_report(const MellinProduct& integral,
                                          const ContourPolicy& policy) {
  validate_product(integral);
  MellinProduct in = integral;

  // exp(-w x^power) factors fold into the decay rate.
  std::vector<PowerKernel> rest;
  for (const auto& k : in.kernels) {
    if (is_plain_exponential(k.kernel) && k.exponent == in.power) {
      in.decay += k.kernel.z;
    } else {
      rest.push_back(k);
    }
  }
  in.kernels = std::move(rest);

  const double a = in.power;
  const double r = in.rho / a;
  const double log_pref = -std::log(a) - r * std::log(in.decay);

  MellinProductReport out;
  if (in.kernels.empty()) {
    if (!(r > 0.0)) throw DomainError("Mellin product diverges at the origin");
    out.value = std::exp(log_pref + log_gamma(r));
    return out;
  }

  auto rescaled = [&](const PowerKernel& k) {
    FoxHSpec h = k.kernel;
    h.z *= std::exp(-(k.exponent / a) * std::log(in.decay));
    return h;
  };

  const double scale = std::exp(log_pref);
  if (in.kernels.size() == 1) {
    FoxHSpec h = rescaled(in.kernels[0]);
    h.a.insert(h.a.begin(), HParam{1.0 - r, in.kernels[0].exponent / a});
    h.n += 1;
    const ContourReport rep = fox_h_report(h, policy);
    out.value = scale * rep.value;
    out.error_estimate = scale * rep.error_estimate;
    return out;
  }

  if (in.kernels.size() == 2) {
    BivariateFoxHSpec spec;
    spec.n_joint = 1;
    spec.joint_upper = {JointParam{1.0 - r, in.kernels[0].exponent / a,
                                   in.kernels[1].exponent / a}};
    spec.first = rescaled(in.kernels[0]);
    spec.second = rescaled(in.kernels[1]);
    const BivariateReport rep = fox_h_bivariate_report(spec, policy);
    out.value = scale * rep.value;
    out.error_estimate = scale * rep.error_estimate;
    return out;
  }

  throw UnsupportedParameters("Mellin products with " +
                              std::to_string(in.kernels.size()) +
                              " kernels are not supported");
}

double mellin_product(const MellinProduct& integral, const ContourPolicy& policy) {
  return mellin_product_report(integral, policy).value;
}

}  // namespace hsec::specfun
