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

#include "hybrid_secrecy/channels.hpp"
#include "hybrid_secrecy/errors.hpp"
#include "oracles.hpp"
#include "reference_values.hpp"

#include <doctest.h>

#include <cmath>

using namespace hsec;
using oracle::rel_diff;

TEST_SUITE("channels") {

TEST_CASE("dB conversions") {
  CHECK(db_to_linear(10.0) == doctest::Approx(10.0).epsilon(1e-15));
  CHECK(db_to_linear(-5.0) == doctest::Approx(0.316227766016838).epsilon(1e-14));
  CHECK(linear_to_db(db_to_linear(7.3)) == doctest::Approx(7.3).epsilon(1e-14));
}

TEST_CASE("alpha-mu CDF integrates its PDF") {
  for (const RfChannelParams ch : {RfChannelParams{2.0, 1, 0.0}, RfChannelParams{2.0, 2, 15.0},
                                   RfChannelParams{3.0, 2, 7.0}, RfChannelParams{5.0, 6, -5.0}}) {
    CAPTURE(ch.alpha);
    CAPTURE(ch.mu);
    for (double x : {0.1, 1.0, 10.0, 100.0}) {
      const double quad = oracle::integrate([&](double g) { return alpha_mu_pdf(ch, g); }, 0.0, x);
      CHECK(std::abs(alpha_mu_cdf(ch, x) - quad) < 1e-10);
      CHECK(std::abs(alpha_mu_cdf_sum(ch, x) - alpha_mu_cdf(ch, x)) < 1e-13);
    }
  }
  CHECK(alpha_mu_cdf({2.0, 1, 0.0}, 1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-15));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(RfChannelParams({0.0, 1, 0.0}).validate(), DomainError);
  CHECK_THROWS_AS(RfChannelParams({2.0, 0, 0.0}).validate(), DomainError);
  CHECK_THROWS_AS(alpha_mu_cdf({2.0, 1, 0.0}, -1.0), DomainError);
  FsoLinkParams f;
  f.s = 3;
  CHECK_THROWS_AS(f.validate(), DomainError);
  f = {};
  f.blockage_p = 1.5;
  CHECK_THROWS_AS(f.validate(), DomainError);
  f = {};
  f.epsilon = 0.0;
  CHECK_THROWS_AS(f.validate(), DomainError);
}

TEST_CASE("Malaga CDF matches the mpmath reference") {
  FsoLinkParams f;
  for (int i = 0; i < 3; ++i) {
    CHECK(rel_diff(malaga_cdf(f, ref::kMalagaS1Gamma[i]), ref::kMalagaS1[i]) < 1e-9);
  }
  f.epsilon = 6.7;
  for (int i = 0; i < 3; ++i) {
    CHECK(rel_diff(malaga_cdf(f, ref::kMalagaS1Gamma[i]), ref::kMalagaEps67[i]) < 1e-9);
  }
  f = {};
  f.s = 2;
  for (int i = 0; i < 3; ++i) {
    CHECK(rel_diff(malaga_cdf(f, ref::kMalagaS2Gamma[i]), ref::kMalagaS2[i]) < 1e-9);
  }
}

TEST_CASE("Malaga CDF integrates its PDF") {
  for (int s : {1, 2}) {
    FsoLinkParams f;
    f.s = s;
    const double x = 5.0;
    const double quad = oracle::integrate([&](double g) { return malaga_pdf(f, g); }, 0.0, x, 1e-10);
    CHECK(std::abs(malaga_cdf(f, x) - quad) < 1e-8);
  }
}

TEST_CASE("Malaga CDF limits and blockage") {
  FsoLinkParams f;
  CHECK(malaga_cdf(f, 0.0) == 0.0);
  CHECK(malaga_cdf(f, 1e12) == 1.0);
  CHECK(malaga_cdf(f, 1e-150) < 1e-100);
  CHECK(electrical_snr(f) == doctest::Approx(10.0).epsilon(1e-14));
  double prev = 0.0;
  for (double x = 0.5; x < 500.0; x *= 1.7) {
    const double v = malaga_cdf(f, x);
    CHECK(v >= prev);
    prev = v;
  }
  f.blockage_p = 0.3;
  CHECK(fso_blocked_cdf(f, 0.0) == doctest::Approx(0.3));
  CHECK(fso_blocked_cdf(f, 10.0) ==
        doctest::Approx(0.3 + 0.7 * ref::kMalagaS1[1]).epsilon(1e-9));
  f.blockage_p = 1.0;
  CHECK(fso_blocked_cdf(f, 3.0) == 1.0);
}

TEST_CASE("Malaga CDF term weights") {
  FsoLinkParams f;
  f.beta_o = 3;
  const auto terms = malaga_cdf_terms(f);
  REQUIRE(terms.size() == 3);
  for (const auto& t : terms) {
    CHECK(t.weight > 0.0);
    CHECK(t.kernel.m == 3);
    CHECK(t.kernel.n == 1);
  }
}

}  // TEST_SUITE
