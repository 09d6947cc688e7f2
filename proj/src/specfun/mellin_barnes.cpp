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
// Mellin–Barnes evaluation of Meijer G and Fox H functions.
//
// The integrand Theta(s) z^{-s} is analytic in the vertical strip that
// separates the left pole family (m-type lower parameters) from the right
// one (n-type upper parameters). On a vertical line inside that strip it
// decays exponentially in |Im s|, so the truncated trapezoidal rule converges
// geometrically with the node spacing. For real parameters the integrand
// satisfies f(c - it) = conj(f(c + it)) and only t >= 0 is summed.

#include "hybrid_secrecy/errors.hpp"
#include "hybrid_secrecy/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace hsec::specfun {

namespace {

using cplx = std::complex<double>;

constexpr double kInf = std::numeric_limits<double>::infinity();
// Integrand magnitudes below exp(-kLogCutoff) of the peak are dropped.
constexpr double kLogCutoff = 40.0;
constexpr double kMaxHalfLength = 1e4;
// Accuracy floor relative to the integral of |f|, i.e. what double
// precision cancellation allows.
constexpr double kCancellationFloor = 1e-14;
// Plain value wrappers refuse results whose error exceeds this many tolerances.
constexpr double kLossFactor = 1e3;
constexpr int kMaxBivariateNodes = 4096;

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

// log Gamma(z) for a numerator factor. A pole on the contour means the strip
// was chosen wrongly, which is a configuration error.
cplx log_gamma_numerator(cplx z) {
  if (is_nonpositive_integer(z)) {
    throw ContourError("Gamma pole on the integration contour");
  }
  return log_gamma(z);
}

// Accumulates -log Gamma(z); returns false when 1/Gamma(z) vanishes.
bool subtract_log_gamma(cplx z, cplx& acc) {
  if (is_nonpositive_integer(z)) return false;
  acc -= log_gamma(z);
  return true;
}

const cplx kZeroLog(-kInf, 0.0);

cplx log_kernel(const FoxHSpec& h, cplx s) {
  cplx acc = 0.0;
  for (int j = 0; j < h.m; ++j) {
    acc += log_gamma_numerator(h.b[j].value + h.b[j].scale * s);
  }
  for (int j = 0; j < h.n; ++j) {
    acc += log_gamma_numerator(1.0 - h.a[j].value - h.a[j].scale * s);
  }
  for (int j = h.m; j < h.q(); ++j) {
    if (!subtract_log_gamma(1.0 - h.b[j].value - h.b[j].scale * s, acc)) {
      return kZeroLog;
    }
  }
  for (int j = h.n; j < h.p(); ++j) {
    if (!subtract_log_gamma(h.a[j].value + h.a[j].scale * s, acc)) {
      return kZeroLog;
    }
  }
  return acc;
}

struct Strip {
  double lo = -kInf;
  double hi = kInf;
};

Strip pole_strip(const FoxHSpec& h) {
  Strip strip;
  for (int j = 0; j < h.m; ++j) {
    strip.lo = std::max(strip.lo, -h.b[j].value / h.b[j].scale);
  }
  for (int j = 0; j < h.n; ++j) {
    strip.hi = std::min(strip.hi, (1.0 - h.a[j].value) / h.a[j].scale);
  }
  return strip;
}

void validate_spec(const FoxHSpec& h, bool need_argument = true) {
  if (h.m < 0 || h.n < 0 || h.m > h.q() || h.n > h.p()) {
    std::ostringstream msg;
    msg << "invalid H orders m=" << h.m << " n=" << h.n << " p=" << h.p()
        << " q=" << h.q();
    throw DomainError(msg.str());
  }
  if (h.m + h.n == 0) {
    throw DomainError("H function with m = n = 0 has no contour");
  }
  for (const auto& par : h.a) {
    if (!(par.scale > 0.0) || !std::isfinite(par.value)) {
      throw DomainError("H upper parameters need finite values and scales > 0");
    }
  }
  for (const auto& par : h.b) {
    if (!(par.scale > 0.0) || !std::isfinite(par.value)) {
      throw DomainError("H lower parameters need finite values and scales > 0");
    }
  }
  if (need_argument && (!(h.z > 0.0) || !std::isfinite(h.z))) {
    throw DomainError("H argument must be positive and finite");
  }
}

// Far from z = 1 the value sits |z|^{distance} below the contour magnitude, so
// the margin to the nearest pole shrinks like 1 / |log z|.
Strip admissible(const Strip& strip, const char* which, double log_z = 0.0) {
  if (!(strip.lo < strip.hi)) {
    std::ostringstream msg;
    msg << "no contour separates the pole families of the " << which
        << " kernel (left poles up to " << strip.lo << ", right poles from "
        << strip.hi << ")";
    throw ContourError(msg.str());
  }
  const double width = strip.hi - strip.lo;
  double margin = std::max(0.02, std::min(0.5, 2.0 / std::abs(log_z)));
  if (std::isfinite(width)) margin = std::min(margin, 0.25 * width);
  return {strip.lo + margin, strip.hi - margin};
}

// Minimizes a roughly unimodal function over [lo, hi]; either end may be
// infinite, in which case the bracket is grown geometrically.
template <typename F>
double minimize_on(F&& f, double lo, double hi) {
  if (!std::isfinite(lo) && !std::isfinite(hi)) {
    lo = -1.0;
    hi = 1.0;
  }
  if (!std::isfinite(hi) || !std::isfinite(lo)) {
    const double dir = std::isfinite(lo) ? 1.0 : -1.0;
    const double start = std::isfinite(lo) ? lo : hi;
    double prev = start;
    double cur = start;
    double fcur = f(cur);
    double step = 1.0;
    while (step < 1e4) {
      const double next = cur + dir * step;
      const double fnext = f(next);
      if (!(fnext < fcur)) {
        lo = std::min(prev, next);
        hi = std::max(prev, next);
        break;
      }
      prev = cur;
      cur = next;
      fcur = fnext;
      step *= 2.0;
    }
    if (!(step < 1e4)) return cur;
  }
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo;
  double b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < 40 && (b - a) > 1e-3 * (1.0 + std::abs(a)); ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

double finite_or_large(cplx value) {
  const double re = value.real();
  return std::isnan(re) ? kInf : re;
}

// ---------------------------------------------------------------------------
// Univariate
// ---------------------------------------------------------------------------

class UnivariateIntegrand {
 public:
  explicit UnivariateIntegrand(const FoxHSpec& h) : h_(h), log_z_(std::log(h.z)) {}

  // log of Theta(s) z^{-s}
  cplx log_value(double c, double t) const {
    const cplx s(c, t);
    const cplx lk = log_kernel(h_, s);
    if (std::isinf(lk.real()) && lk.real() < 0.0) return kZeroLog;
    return lk - s * log_z_;
  }

  cplx value(double c, double t) const {
    const cplx l = log_value(c, t);
    if (std::isinf(l.real())) return 0.0;
    return std::exp(l);
  }

 private:
  const FoxHSpec& h_;
  double log_z_;
};

double choose_abscissa(const UnivariateIntegrand& f, const Strip& search) {
  auto proxy = [&](double c) {
    double worst = -kInf;
    for (double t : {0.0, 0.5, 2.0}) {
      worst = std::max(worst, finite_or_large(f.log_value(c, t)));
    }
    return worst;
  };
  return minimize_on(proxy, search.lo, search.hi);
}

double choose_half_length(const UnivariateIntegrand& f, double c) {
  double peak = finite_or_large(f.log_value(c, 0.0));
  if (std::isinf(peak) && peak < 0.0) peak = -1e300;
  double t = 0.0;
  int below = 0;
  while (t < kMaxHalfLength) {
    t += 0.5 + 0.05 * t;
    const double v = f.log_value(c, t).real();
    if (v > peak) peak = v;
    if (v < peak - kLogCutoff) {
      if (++below >= 3) return t;
    } else {
      below = 0;
    }
  }
  throw ConvergenceError(
      "Mellin-Barnes integrand does not decay along the contour", kInf, kInf);
}

}  // namespace

void ContourPolicy::validate() const {
  if (nodes < 64) throw DomainError("contour policy needs at least 64 nodes");
  if (!(tolerance > 0.0 && tolerance < 1.0)) {
    throw DomainError("contour tolerance must lie in (0, 1)");
  }
  if (max_nodes < nodes) throw DomainError("max_nodes below initial node count");
  if (!(half_length >= 0.0)) throw DomainError("half_length must be >= 0");
}

FoxHSpec FoxHSpec::from_meijer(const MeijerGSpec& g) {
  FoxHSpec h;
  h.m = g.m;
  h.n = g.n;
  h.z = g.z;
  h.a.reserve(g.a.size());
  h.b.reserve(g.b.size());
  for (double v : g.a) h.a.push_back({v, 1.0});
  for (double v : g.b) h.b.push_back({v, 1.0});
  return h;
}

FoxHSpec exp_kernel(double w) {
  FoxHSpec h;
  h.m = 1;
  h.b = {{0.0, 1.0}};
  h.z = w;
  return h;
}

FoxHSpec rational_kernel(double k, double w, double scale) {
  FoxHSpec h;
  h.m = 1;
  h.n = 1;
  h.a = {{1.0 - k, scale}};
  h.b = {{0.0, 1.0}};
  h.z = w;
  return h;
}

ContourReport fox_h_report(const FoxHSpec& spec, const ContourPolicy& policy) {
  policy.validate();
  validate_spec(spec);
  const Strip strip = pole_strip(spec);
  const Strip search = admissible(strip, "H", std::log(spec.z));
  const UnivariateIntegrand f(spec);

  double c = 0.0;
  if (policy.abscissa) {
    c = *policy.abscissa;
    if (!(c > strip.lo && c < strip.hi)) {
      std::ostringstream msg;
      msg << "requested abscissa " << c << " is outside the pole-free strip ("
          << strip.lo << ", " << strip.hi << ")";
      throw ContourError(msg.str());
    }
  } else {
    c = choose_abscissa(f, search);
  }
  const double half_length =
      std::max(policy.half_length, choose_half_length(f, c));

  // Trapezoidal sums over t >= 0; the full-line sum is
  //   h (f(0) + 2 Re sum_{k>=1} f(kh)).
  // z^{-it} oscillates with period 2 pi / |log z|; start with eight nodes per period.
  const double periods = half_length * std::abs(std::log(spec.z)) / (2.0 * std::numbers::pi);
  int intervals = std::max(policy.nodes / 4, 16);
  if (8.0 * periods > intervals) {
    intervals = static_cast<int>(std::min(8.0 * periods, 0.25 * policy.max_nodes)) + 1;
  }
  double h = half_length / intervals;
  const cplx f0 = f.value(c, 0.0);
  double tail = 0.0;
  double tail_abs = 0.0;
  for (int k = 1; k <= intervals; ++k) {
    const cplx v = f.value(c, k * h);
    tail += v.real();
    tail_abs += std::abs(v);
  }
  auto estimate = [&] { return h * (f0.real() + 2.0 * tail) / (2.0 * std::numbers::pi); };
  auto l1 = [&] {
    return h * (std::abs(f0) + 2.0 * tail_abs) / (2.0 * std::numbers::pi);
  };

  double previous = estimate();
  int refinements = 0;
  const int target_nodes = std::max(policy.nodes, 64);
  while (true) {
    // Halve the spacing: the new nodes are the odd multiples of h / 2.
    h *= 0.5;
    intervals *= 2;
    for (int k = 1; k <= intervals; k += 2) {
      const cplx v = f.value(c, k * h);
      tail += v.real();
      tail_abs += std::abs(v);
    }
    ++refinements;
    const double current = estimate();
    const double diff = std::abs(current - previous);
    const int nodes = 2 * intervals + 1;
    const bool reached_initial = nodes >= target_nodes;
    const double allowed =
        policy.tolerance * std::max(std::abs(current), kCancellationFloor * l1() /
                                                           policy.tolerance);
    if (reached_initial && (diff <= allowed || !policy.adaptive)) {
      ContourReport report;
      report.value = current;
      report.error_estimate = std::max(diff, kCancellationFloor * l1());
      report.imag_residue = h * f0.imag() / (2.0 * std::numbers::pi);
      report.refinements = refinements;
      report.axis = {c, half_length, nodes};
      if (std::abs(report.imag_residue) >
          std::max(policy.tolerance * std::abs(current), kCancellationFloor * l1())) {
        throw ConvergenceError("imaginary residue exceeds tolerance", current,
                               previous);
      }
      return report;
    }
    if (2 * nodes > policy.max_nodes) {
      std::ostringstream msg;
      msg << "Mellin-Barnes quadrature did not converge within "
          << policy.max_nodes << " nodes (last " << current << ", previous "
          << previous << ")";
      throw ConvergenceError(msg.str(), current, previous);
    }
    previous = current;
  }
}

double fox_h(const FoxHSpec& spec, const ContourPolicy& policy) {
  const ContourReport r = fox_h_report(spec, policy);
  if (r.error_estimate > kLossFactor * policy.tolerance * std::abs(r.value)) {
    std::ostringstream msg;
    msg << "H function at z=" << spec.z << " lost its digits to cancellation (value "
        << r.value << ", error " << r.error_estimate << ")";
    throw ConvergenceError(msg.str(), r.value, r.value + r.error_estimate);
  }
  return r.value;
}

ContourReport meijer_g_report(const MeijerGSpec& spec,
                              const ContourPolicy& policy) {
  return fox_h_report(FoxHSpec::from_meijer(spec), policy);
}

double meijer_g(const MeijerGSpec& spec, const ContourPolicy& policy) {
  return fox_h(FoxHSpec::from_meijer(spec), policy);
}

// ---------------------------------------------------------------------------
// Bivariate
// ---------------------------------------------------------------------------

namespace {

class BivariateIntegrand {
 public:
  explicit BivariateIntegrand(const BivariateFoxHSpec& spec)
      : spec_(spec),
        log_x_(std::log(spec.first.z)),
        log_y_(std::log(spec.second.z)) {}

  cplx axis_first(cplx u) const {
    const cplx lk = log_kernel(spec_.first, u);
    if (std::isinf(lk.real())) return kZeroLog;
    return lk - u * log_x_;
  }

  cplx axis_second(cplx v) const {
    const cplx lk = log_kernel(spec_.second, v);
    if (std::isinf(lk.real())) return kZeroLog;
    return lk - v * log_y_;
  }

  cplx joint(cplx u, cplx v) const {
    cplx acc = 0.0;
    const int p = static_cast<int>(spec_.joint_upper.size());
    for (int j = 0; j < spec_.n_joint; ++j) {
      const auto& jp = spec_.joint_upper[j];
      acc += log_gamma_numerator(1.0 - jp.value - jp.first * u - jp.second * v);
    }
    for (int j = spec_.n_joint; j < p; ++j) {
      const auto& jp = spec_.joint_upper[j];
      if (!subtract_log_gamma(jp.value + jp.first * u + jp.second * v, acc)) {
        return kZeroLog;
      }
    }
    for (const auto& jp : spec_.joint_lower) {
      if (!subtract_log_gamma(1.0 - jp.value - jp.first * u - jp.second * v, acc)) {
        return kZeroLog;
      }
    }
    return acc;
  }

  cplx log_value(double cu, double tu, double cv, double tv) const {
    const cplx u(cu, tu);
    const cplx v(cv, tv);
    const cplx a = axis_first(u);
    if (std::isinf(a.real())) return kZeroLog;
    const cplx b = axis_second(v);
    if (std::isinf(b.real())) return kZeroLog;
    const cplx j = joint(u, v);
    if (std::isinf(j.real())) return kZeroLog;
    return a + b + j;
  }

 private:
  const BivariateFoxHSpec& spec_;
  double log_x_;
  double log_y_;
};

struct Box {
  Strip u;
  Strip v;
};

// Lower bound on Re of every numerator joint argument, per joint parameter.
std::vector<double> joint_margins(const BivariateFoxHSpec& spec, const Box& box) {
  std::vector<double> margins;
  for (int j = 0; j < spec.n_joint; ++j) {
    const auto& jp = spec.joint_upper[j];
    auto min_term = [](double coef, const Strip& s) {
      if (coef > 0.0) return coef * s.lo;
      if (coef < 0.0) return coef * s.hi;
      return 0.0;
    };
    const double slack =
        1.0 - jp.value - min_term(jp.first, box.u) - min_term(jp.second, box.v);
    if (!(slack > 0.0)) {
      throw ContourError(
          "no contour keeps the joint Gamma factor of the bivariate H function "
          "pole-free");
    }
    margins.push_back(std::isfinite(slack) ? std::min(0.5, 0.25 * slack) : 0.5);
  }
  return margins;
}

// Feasible interval for one coordinate with the other held fixed.
Strip feasible_line(const BivariateFoxHSpec& spec, const Box& box,
                    const std::vector<double>& margins, bool along_first,
                    double other) {
  Strip s = along_first ? box.u : box.v;
  for (int j = 0; j < spec.n_joint; ++j) {
    const auto& jp = spec.joint_upper[j];
    const double coef = along_first ? jp.first : jp.second;
    const double rest = along_first ? jp.second * other : jp.first * other;
    const double bound = 1.0 - jp.value - rest - margins[j];
    if (coef > 0.0) s.hi = std::min(s.hi, bound / coef);
    if (coef < 0.0) s.lo = std::max(s.lo, bound / coef);
  }
  return s;
}

double start_coordinate(const Strip& s, double pressure) {
  // Positive pressure means the joint constraints prefer small values.
  if (pressure >= 0.0) {
    return std::isfinite(s.lo) ? s.lo : s.hi - 1.0;
  }
  return std::isfinite(s.hi) ? s.hi : s.lo + 1.0;
}

double scan_axis(const BivariateIntegrand& f, double cu, double cv,
                 bool along_first) {
  double peak = finite_or_large(f.log_value(cu, 0.0, cv, 0.0));
  if (std::isinf(peak) && peak < 0.0) peak = -1e300;
  double t = 0.0;
  int below = 0;
  while (t < kMaxHalfLength) {
    t += 0.5 + 0.05 * t;
    const double v = along_first ? f.log_value(cu, t, cv, 0.0).real()
                                 : f.log_value(cu, 0.0, cv, t).real();
    if (v > peak) peak = v;
    if (v < peak - kLogCutoff) {
      if (++below >= 3) return t;
    } else {
      below = 0;
    }
  }
  throw ConvergenceError(
      "bivariate Mellin-Barnes integrand does not decay along an axis", kInf,
      kInf);
}

}  // namespace

BivariateReport fox_h_bivariate_report(const BivariateFoxHSpec& spec,
                                       const ContourPolicy& policy) {
  policy.validate();
  validate_spec(spec.first);
  validate_spec(spec.second);
  if (spec.n_joint < 0 || spec.n_joint > static_cast<int>(spec.joint_upper.size())) {
    throw DomainError("joint numerator count exceeds the joint upper group");
  }

  const bool separable = spec.joint_upper.empty() && spec.joint_lower.empty();
  if (separable) {
    const ContourReport a = fox_h_report(spec.first, policy);
    const ContourReport b = fox_h_report(spec.second, policy);
    BivariateReport report;
    report.value = a.value * b.value;
    report.error_estimate =
        std::abs(a.error_estimate * b.value) + std::abs(b.error_estimate * a.value);
    report.imag_residue = 0.0;
    report.refinements = std::max(a.refinements, b.refinements);
    report.axes = {a.axis, b.axis};
    return report;
  }

  const Box box{admissible(pole_strip(spec.first), "first"),
                admissible(pole_strip(spec.second), "second")};
  const std::vector<double> margins = joint_margins(spec, box);
  const BivariateIntegrand f(spec);

  double pressure_u = 0.0;
  double pressure_v = 0.0;
  for (int j = 0; j < spec.n_joint; ++j) {
    pressure_u += spec.joint_upper[j].first;
    pressure_v += spec.joint_upper[j].second;
  }
  double cu = start_coordinate(box.u, pressure_u);
  double cv = start_coordinate(box.v, pressure_v);
  for (int j = 0; j < spec.n_joint; ++j) {
    const auto& jp = spec.joint_upper[j];
    if (1.0 - jp.value - jp.first * cu - jp.second * cv < margins[j]) {
      throw ContourError("bivariate contour start violates the joint constraint");
    }
  }

  auto proxy = [&](double u0, double v0) {
    double worst = -kInf;
    constexpr std::array<std::array<double, 2>, 7> probes = {{{0.0, 0.0},
                                                               {0.5, 0.0},
                                                               {0.0, 0.5},
                                                               {0.5, 0.5},
                                                               {0.5, -0.5},
                                                               {2.0, 0.0},
                                                               {0.0, 2.0}}};
    for (const auto& tp : probes) {
      worst = std::max(worst, finite_or_large(f.log_value(u0, tp[0], v0, tp[1])));
    }
    return worst;
  };

  if (!policy.abscissa) {
    for (int round = 0; round < 3; ++round) {
      const Strip su = feasible_line(spec, box, margins, true, cv);
      if (su.lo < su.hi) cu = minimize_on([&](double x) { return proxy(x, cv); }, su.lo, su.hi);
      const Strip sv = feasible_line(spec, box, margins, false, cu);
      if (sv.lo < sv.hi) cv = minimize_on([&](double y) { return proxy(cu, y); }, sv.lo, sv.hi);
    }
  }

  double tu = std::max(policy.half_length, scan_axis(f, cu, cv, true));
  double tv = std::max(policy.half_length, scan_axis(f, cu, cv, false));

  // Check decay along the rectangle boundary; the joint factor can decay
  // slower along diagonals than along the axes.
  const double peak = f.log_value(cu, 0.0, cv, 0.0).real();
  for (int grow = 0; grow < 6; ++grow) {
    double edge = -kInf;
    for (int k = -16; k <= 16; ++k) {
      const double su = tu * k / 16.0;
      const double sv = tv * k / 16.0;
      edge = std::max(edge, f.log_value(cu, tu, cv, sv).real());
      edge = std::max(edge, f.log_value(cu, su, cv, tv).real());
      edge = std::max(edge, f.log_value(cu, su, cv, -tv).real());
    }
    if (edge < peak - kLogCutoff + 4.0) break;
    tu *= 1.5;
    tv *= 1.5;
  }

  const int node_cap = std::min(policy.max_nodes, kMaxBivariateNodes);
  int iu = std::max(policy.nodes / 4, 16);  // intervals on [0, tu]
  int iv = 2 * iu;                          // intervals on [-tv, tv]
  double hu = tu / iu;
  double hv = 2.0 * tv / iv;

  // Running sums over the nodes at the current level.
  double sum_re = 0.0;
  double sum_abs = 0.0;
  double row0_im = 0.0;
  std::vector<cplx> lu;
  std::vector<cplx> lv;

  auto accumulate = [&](bool skip_even) {
    lu.resize(iu + 1);
    lv.resize(iv + 1);
    for (int i = 0; i <= iu; ++i) lu[i] = f.axis_first(cplx(cu, i * hu));
    for (int j = 0; j <= iv; ++j) lv[j] = f.axis_second(cplx(cv, -tv + j * hv));
    for (int i = 0; i <= iu; ++i) {
      if (std::isinf(lu[i].real())) continue;
      const double weight = i == 0 ? 1.0 : 2.0;
      const cplx u(cu, i * hu);
      for (int j = 0; j <= iv; ++j) {
        if (skip_even && i % 2 == 0 && j % 2 == 0) continue;
        if (std::isinf(lv[j].real())) continue;
        const cplx v(cv, -tv + j * hv);
        const cplx lj = f.joint(u, v);
        if (std::isinf(lj.real())) continue;
        const cplx val = std::exp(lu[i] + lv[j] + lj);
        sum_re += weight * val.real();
        sum_abs += weight * std::abs(val);
        if (i == 0) row0_im += val.imag();
      }
    }
  };

  constexpr double kNorm = 1.0 / (4.0 * std::numbers::pi * std::numbers::pi);
  accumulate(false);
  double previous = hu * hv * sum_re * kNorm;
  int refinements = 0;
  const int target = std::max(policy.nodes, 64);
  while (true) {
    iu *= 2;
    iv *= 2;
    hu *= 0.5;
    hv *= 0.5;
    accumulate(true);
    ++refinements;
    const double current = hu * hv * sum_re * kNorm;
    const double l1 = hu * hv * sum_abs * kNorm;
    const double diff = std::abs(current - previous);
    const double allowed = std::max(policy.tolerance * std::abs(current),
                                    kCancellationFloor * l1);
    if (iv + 1 >= target && (diff <= allowed || !policy.adaptive)) {
      BivariateReport report;
      report.value = current;
      report.error_estimate = std::max(diff, kCancellationFloor * l1);
      report.imag_residue = hu * hv * row0_im * kNorm;
      report.refinements = refinements;
      report.axes = {ContourAxis{cu, tu, 2 * iu + 1}, ContourAxis{cv, tv, iv + 1}};
      if (std::abs(report.imag_residue) > std::max(allowed, kCancellationFloor * l1)) {
        throw ConvergenceError("bivariate imaginary residue exceeds tolerance",
                               current, previous);
      }
      return report;
    }
    if (2 * iv + 1 > node_cap) {
      std::ostringstream msg;
      msg << "bivariate Mellin-Barnes quadrature did not converge within "
          << node_cap << " nodes per axis (last " << current << ", previous "
          << previous << "; axis 1: c=" << cu << " T=" << tu
          << ", axis 2: c=" << cv << " T=" << tv << ")";
      throw ConvergenceError(msg.str(), current, previous);
    }
    previous = current;
  }
}

double fox_h_bivariate(const BivariateFoxHSpec& spec, const ContourPolicy& policy) {
  return fox_h_bivariate_report(spec, policy).value;
}

}  // namespace hsec::specfun
