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

#ifndef HYBRID_SECRECY_SPECFUN_HPP
#define HYBRID_SECRECY_SPECFUN_HPP

#include <array>
#include <complex>
#include <optional>
#include <vector>

namespace hsec::specfun {

// ---------------------------------------------------------------------------
// Gamma family
// ---------------------------------------------------------------------------

double gamma_fn(double x);
double log_gamma(double x);

/// gamma(a, x) = int_0^x t^{a-1} e^{-t} dt.
double lower_incomplete_gamma(double a, double x);
/// Gamma(a, x) = int_x^inf t^{a-1} e^{-t} dt.
double upper_incomplete_gamma(double a, double x);
/// P(a, x) = gamma(a, x) / Gamma(a).
double regularized_lower_gamma(double a, double x);
/// Q(a, x) = Gamma(a, x) / Gamma(a).
double regularized_upper_gamma(double a, double x);

/// Principal-ish log Gamma on the complex plane (Lanczos, g = 7). The
/// imaginary part is only defined modulo 2*pi, which is all the Mellin–Barnes
/// integrands need since they exponentiate it.
std::complex<double> log_gamma(std::complex<double> z);

// ---------------------------------------------------------------------------
// Mellin–Barnes integrals
// ---------------------------------------------------------------------------

/// How a Mellin–Barnes integral is discretized. The integration path is the
/// vertical line Re(s) = abscissa, truncated to |Im(s)| <= half_length and
/// summed with the trapezoidal rule.
struct ContourPolicy {
  /// Fixed abscissa; chosen automatically inside the pole-separating strip
  /// when empty.
  std::optional<double> abscissa;
  /// Minimum half-length; 0 picks it from the integrand decay.
  double half_length = 0.0;
  /// Initial node count over the full line.
  int nodes = 64;
  bool adaptive = true;
  double tolerance = 1e-8;
  int max_nodes = 1 << 16;

  /// Throws DomainError when nodes < 64 or tolerance is outside (0, 1).
  void validate() const;
};

struct MeijerGSpec {
  int m = 0;
  int n = 0;
  std::vector<double> a;  // p upper parameters, the first n are "n-type"
  std::vector<double> b;  // q lower parameters, the first m are "m-type"
  double z = 1.0;

  int p() const { return static_cast<int>(a.size()); }
  int q() const { return static_cast<int>(b.size()); }
};

/// One (value, scale) pair of a Fox H function.
struct HParam {
  double value = 0.0;
  double scale = 1.0;
};

/// H^{m,n}_{p,q}[z | (a_j, A_j); (b_j, B_j)] with kernel
///   prod_{j<m} Gamma(b_j + B_j s) prod_{j<n} Gamma(1 - a_j - A_j s)
///   / (prod_{j>=m} Gamma(1 - b_j - B_j s) prod_{j>=n} Gamma(a_j + A_j s))
/// integrated against z^{-s} ds / (2 pi i).
struct FoxHSpec {
  int m = 0;
  int n = 0;
  std::vector<HParam> a;
  std::vector<HParam> b;
  double z = 1.0;

  int p() const { return static_cast<int>(a.size()); }
  int q() const { return static_cast<int>(b.size()); }

  static FoxHSpec from_meijer(const MeijerGSpec& g);
};

/// Parameter of the joint group of a bivariate H function: the Gamma
/// argument is  1 - value - first * u - second * v  for numerator terms and
/// value + first * u + second * v  for upper denominator terms.
struct JointParam {
  double value = 0.0;
  double first = 1.0;
  double second = 1.0;
};

/// Extended generalized bivariate Fox H function
///   (2 pi i)^{-2} oint oint phi(u, v) theta_1(u) theta_2(v) x^{-u} y^{-v} du dv
/// where theta_k are the kernels of `first` and `second` (whose z fields are
/// the arguments x and y) and
///   phi = prod_{j<n_joint} Gamma(1 - a_j - alpha_j u - A_j v)
///         / (prod_{j>=n_joint} Gamma(a_j + alpha_j u + A_j v)
///            prod_j Gamma(1 - b_j - beta_j u - B_j v)).
struct BivariateFoxHSpec {
  int n_joint = 0;
  std::vector<JointParam> joint_upper;
  std::vector<JointParam> joint_lower;
  FoxHSpec first;
  FoxHSpec second;
};

struct ContourAxis {
  double abscissa = 0.0;
  double half_length = 0.0;
  int nodes = 0;
};

struct ContourReport {
  double value = 0.0;
  /// Change between the last two refinement levels.
  double error_estimate = 0.0;
  double imag_residue = 0.0;
  int refinements = 0;
  ContourAxis axis;
};

struct BivariateReport {
  double value = 0.0;
  double error_estimate = 0.0;
  double imag_residue = 0.0;
  int refinements = 0;
  std::array<ContourAxis, 2> axes;
};

double meijer_g(const MeijerGSpec& spec, const ContourPolicy& policy = {});
double fox_h(const FoxHSpec& spec, const ContourPolicy& policy = {});
double fox_h_bivariate(const BivariateFoxHSpec& spec,
                       const ContourPolicy& policy = {});

ContourReport meijer_g_report(const MeijerGSpec& spec,
                              const ContourPolicy& policy = {});
ContourReport fox_h_report(const FoxHSpec& spec,
                           const ContourPolicy& policy = {});
BivariateReport fox_h_bivariate_report(const BivariateFoxHSpec& spec,
                                       const ContourPolicy& policy = {});

// ---------------------------------------------------------------------------
// Mellin products
// ---------------------------------------------------------------------------

/// A factor h(w * x^c) of an integrand, h given by an H kernel whose z field
/// carries the weight w.
struct PowerKernel {
  FoxHSpec kernel;
  double exponent = 1.0;
};

/// int_0^inf x^{rho-1} exp(-decay * x^power) prod_k h_k(w_k x^{c_k}) dx
///
/// Every integral the secrecy expressions need has this shape. Swapping the
/// order of integration turns it into an H function with one extra joint
/// Gamma factor: univariate for one kernel, bivariate for two.
struct MellinProduct {
  double rho = 1.0;
  double decay = 1.0;
  double power = 1.0;
  std::vector<PowerKernel> kernels;
};

double mellin_product(const MellinProduct& integral,
                      const ContourPolicy& policy = {});

/// Error estimate of the last `mellin_product` style evaluation.
struct MellinProductReport {
  double value = 0.0;
  double error_estimate = 0.0;
};
MellinProductReport mellin_product_report(const MellinProduct& integral,
                                          const ContourPolicy& policy = {});

/// e^{-w} as H^{1,0}_{0,1}[w | -; (0, 1)].
FoxHSpec exp_kernel(double w);
/// Gamma(k) (1 + w)^{-k} as H^{1,1}_{1,1}[w | (1 - k, 1); (0, 1)], or the
/// generalized kernel with upper scale A.
FoxHSpec rational_kernel(double k, double w, double scale = 1.0);

}  // namespace hsec::specfun

#endif  // HYBRID_SECRECY_SPECFUN_HPP
