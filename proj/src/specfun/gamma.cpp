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

#include "hybrid_secrecy/errors.hpp"
#include "hybrid_secrecy/specfun.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace hsec::specfun {

namespace {

void require_positive(double a, const char* what) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError(std::string(what) + " requires a positive argument, got " +
                      std::to_string(a));
  }
}

void require_incomplete_args(double a, double x) {
  require_positive(a, "incomplete gamma");
  if (!(x >= 0.0)) {
    throw DomainError("incomplete gamma requires x >= 0, got " +
                      std::to_string(x));
  }
}

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// log(sin(pi z)) without overflow for large |Im z|.
std::complex<double> log_sin_pi(std::complex<double> z) {
  using std::numbers::pi;
  // sin(pi z) has period 2 in Re z; reducing first keeps pi*x small.
  const double shift = 2.0 * std::round(z.real() / 2.0);
  z -= shift;
  const std::complex<double> w = pi * z;
  const std::complex<double> i(0.0, 1.0);
  if (w.imag() > 20.0) {
    return -i * w + std::log(i / 2.0) + std::log(1.0 - std::exp(2.0 * i * w));
  }
  if (w.imag() < -20.0) {
    return i * w + std::log(-i / 2.0) + std::log(1.0 - std::exp(-2.0 * i * w));
  }
  return std::log(std::sin(w));
}

}  // namespace

double gamma_fn(double x) {
  require_positive(x, "gamma_fn");
  return boost::math::tgamma(x);
}

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  return boost::math::lgamma(x);
}

double lower_incomplete_gamma(double a, double x) {
  require_incomplete_args(a, x);
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return boost::math::tgamma(a);
  return boost::math::tgamma_lower(a, x);
}

double upper_incomplete_gamma(double a, double x) {
  require_incomplete_args(a, x);
  if (x == 0.0) return boost::math::tgamma(a);
  if (std::isinf(x)) return 0.0;
  return boost::math::tgamma(a, x);
}

double regularized_lower_gamma(double a, double x) {
  require_incomplete_args(a, x);
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  return boost::math::gamma_p(a, x);
}

double regularized_upper_gamma(double a, double x) {
  require_incomplete_args(a, x);
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  return boost::math::gamma_q(a, x);
}

std::complex<double> log_gamma(std::complex<double> z) {
  using std::numbers::pi;
  if (z.real() < 0.5) {
    return std::log(pi) - log_sin_pi(z) - log_gamma(1.0 - z);
  }
  z -= 1.0;
  std::complex<double> sum = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) {
    sum += kLanczos[k] / (z + static_cast<double>(k));
  }
  const std::complex<double> t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

}  // namespace hsec::specfun
