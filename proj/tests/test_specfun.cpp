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
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace hsec;
using namespace hsec::specfun;
using oracle::rel_diff;

TEST_SUITE("specfun") {

TEST_CASE("gamma function values") {
  CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-14));
  for (double x : {0.3, 1.0, 2.5, 7.25, 30.0}) {
    const auto z = log_gamma(std::complex<double>(x, 0.0));
    CHECK(std::abs(z.real() - std::lgamma(x)) < 1e-12 * std::max(1.0, std::abs(std::lgamma(x))));
    CHECK(std::abs(z.imag()) < 1e-12);
  }
  // Reflection branch: |Gamma(-0.5)| = 2 sqrt(pi).
  const auto neg = log_gamma(std::complex<double>(-0.5, 0.0));
  CHECK(rel_diff(std::exp(neg.real()), 2.0 * std::sqrt(std::numbers::pi)) < 1e-12);
  // Gamma(1 + i y) Gamma(1 - i y) = pi y / sinh(pi y)
  const double y = 1.7;
  const auto p = log_gamma(std::complex<double>(1.0, y)) + log_gamma(std::complex<double>(1.0, -y));
  CHECK(rel_diff(std::exp(p.real()), std::numbers::pi * y / std::sinh(std::numbers::pi * y)) <
        1e-12);
}

TEST_CASE("incomplete gamma complementarity and recurrence") {
  for (double a : {0.5, 1.0, 2.0, 4.5, 12.0}) {
    for (double x : {0.01, 0.7, 3.0, 15.0}) {
      CHECK(rel_diff(lower_incomplete_gamma(a, x) + upper_incomplete_gamma(a, x), gamma_fn(a)) <
            1e-12);
      CHECK(std::abs(regularized_lower_gamma(a, x) + regularized_upper_gamma(a, x) - 1.0) <
            1e-14);
      const double lhs = lower_incomplete_gamma(a + 1.0, x);
      const double rhs = a * lower_incomplete_gamma(a, x) - std::pow(x, a) * std::exp(-x);
      CHECK(rel_diff(lhs, rhs) < 1e-10);
    }
  }
  CHECK(regularized_lower_gamma(2.0, 0.0) == 0.0);
  CHECK_THROWS_AS(regularized_lower_gamma(-1.0, 1.0), DomainError);
  CHECK_THROWS_AS(upper_incomplete_gamma(1.0, -1.0), DomainError);
}

TEST_CASE("Meijer G elementary identities") {
  for (double z : {1e-3, 0.5, 1.0, 5.0, 20.0, 60.0}) {
    CAPTURE(z);
    // G^{1,0}_{0,1}[z | -; 0] = e^{-z}
    CHECK(rel_diff(meijer_g({1, 0, {}, {0.0}, z}), std::exp(-z)) < 1e-9);
    for (double a : {0.5, 2.0, 3.7}) {
      CAPTURE(a);
      // G^{1,1}_{1,2}[z | 1; a, 0] = gamma(a, z)
      CHECK(rel_diff(meijer_g({1, 1, {1.0}, {a, 0.0}, z}), lower_incomplete_gamma(a, z)) < 1e-9);
      // G^{2,0}_{1,2}[z | 1; a, 0] = Gamma(a, z)
      CHECK(rel_diff(meijer_g({2, 0, {1.0}, {a, 0.0}, z}), upper_incomplete_gamma(a, z)) < 1e-9);
      // G^{1,1}_{1,1}[z | 1 - a; 0] = Gamma(a) (1 + z)^{-a}
      CHECK(rel_diff(meijer_g({1, 1, {1.0 - a}, {0.0}, z}), gamma_fn(a) * std::pow(1.0 + z, -a)) <
            1e-9);
    }
  }
}

TEST_CASE("Fox H reduces to Meijer G for unit scales") {
  const MeijerGSpec g{2, 1, {0.3, 1.4}, {0.5, 1.1, -0.2}, 0.8};
  CHECK(rel_diff(fox_h(FoxHSpec::from_meijer(g)), meijer_g(g)) < 1e-12);
  // H^{1,0}_{0,1}[z | -; (b, B)] = z^{b/B} e^{-z^{1/B}} / B
  for (double scale : {0.5, 2.0, 3.0}) {
    const double b = 0.4;
    const double z = 1.3;
    FoxHSpec h{1, 0, {}, {{b, scale}}, z};
    const double expect = std::pow(z, b / scale) * std::exp(-std::pow(z, 1.0 / scale)) / scale;
    CHECK(rel_diff(fox_h(h), expect) < 1e-9);
  }
}

TEST_CASE("rational kernel stays accurate far from z = 1") {
  // Leading right-pole residue: Gamma(k/A) / A * w^{-k/A}
  const double k = 1.2;
  const double scale = 0.4;
  for (double w : {1e10, 1e40, 1e80}) {
    CAPTURE(w);
    const double expect = std::tgamma(k / scale) / scale * std::pow(w, -k / scale);
    CHECK(rel_diff(fox_h(rational_kernel(k, w, scale)), expect) < 1e-8);
  }
  // Small-argument side: G^{1,0}_{0,1}[z | -; b] = z^b e^{-z}
  const double z = 1e-120;
  CHECK(rel_diff(meijer_g({1, 0, {}, {2.5}, z}), std::pow(z, 2.5)) < 1e-9);
}

TEST_CASE("separable bivariate H is a product") {
  BivariateFoxHSpec spec;
  spec.first = exp_kernel(0.7);
  spec.second = rational_kernel(2.0, 0.3);
  const double expect = std::exp(-0.7) * std::pow(1.3, -2.0);
  CHECK(rel_diff(fox_h_bivariate(spec), expect) < 1e-9);
}

TEST_CASE("Mellin products against quadrature") {
  auto ref = [](auto&& f) { return oracle::integrate_half_line(f, 1.0); };
  // int x^{0.5} e^{-x^2 - 3x} dx
  const MellinProduct one{1.5, 1.0, 2.0, {{exp_kernel(3.0), 1.0}}};
  CHECK(rel_diff(mellin_product(one), 0.128981646501734) < 1e-9);
  CHECK(rel_diff(mellin_product(one),
                 ref([](double x) { return std::sqrt(x) * std::exp(-x * x - 3.0 * x); })) < 1e-9);
  // int x^{0.5} e^{-x^2 - x} / (1 + 2 sqrt(x)) dx
  const MellinProduct two{1.5, 1.0, 2.0,
                          {{exp_kernel(1.0), 1.0}, {rational_kernel(1.0, 2.0), 0.5}}};
  CHECK(rel_diff(mellin_product(two), 0.138872826329917) < 1e-8);
  // Merged exponential: int x e^{-2 x^2} e^{-x^2} = 1 / 6
  const MellinProduct merged{2.0, 2.0, 2.0, {{exp_kernel(1.0), 2.0}}};
  CHECK(rel_diff(mellin_product(merged), 1.0 / 6.0) < 1e-13);
  MellinProduct three = two;
  three.kernels.push_back({exp_kernel(1.0), 0.7});
  CHECK_THROWS_AS(mellin_product(three), UnsupportedParameters);
}

TEST_CASE("policy validation and failure modes") {
  ContourPolicy p;
  p.nodes = 32;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p = {};
  p.tolerance = 0.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p.tolerance = 1.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
  // Gamma(s) Gamma(1 - 2 - s): left poles reach 0, right poles start at -1.
  CHECK_THROWS_AS(meijer_g({1, 1, {2.0}, {0.0}, 1.0}), ContourError);
  ContourPolicy tight;
  tight.tolerance = 1e-14;
  tight.max_nodes = 64;
  try {
    (void)meijer_g({2, 1, {0.3}, {0.5, 1.1}, 40.0}, tight);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(std::isfinite(e.last_estimate()));
    CHECK(std::isfinite(e.previous_estimate()));
  }
}

}  // TEST_SUITE
