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
#include "hybrid_secrecy/mc_oracle.hpp"

#include <doctest.h>

#include <cmath>

using namespace hsec;
using namespace hsec::mc;

namespace {

constexpr std::size_t kN = 1000000;

double standard_error(const Eigen::ArrayXd& x) {
  const double mean = x.mean();
  return std::sqrt((x - mean).square().sum() / (x.size() - 1.0) / x.size());
}

SecrecyConfig base_config() {
  SecrecyConfig c;
  c.rf_sr = {2.0, 2, 15.0};
  c.rf_sp = {2.0, 2, 10.0};
  c.rf_se = {2.0, 2, 10.0};
  c.fso.blockage_p = 0.1;
  c.pc = {0.0, std::nullopt, Scenario::kI};
  return c;
}

}  // namespace

TEST_SUITE("mc-oracle") {

TEST_CASE("Philox4x32-10 known answers") {
  using C = Philox4x32::Counter;
  CHECK(Philox4x32::generate({0, 0, 0, 0}, {0, 0}) ==
        C{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
  CHECK(Philox4x32::generate({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                             {0xa4093822u, 0x299f31d0u}) ==
        C{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("uniforms stay inside (0, 1)") {
  RandomStream rs(7, 1, 0);
  double lo = 1.0;
  double hi = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rs.uniform();
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  CHECK(lo > 0.0);
  CHECK(hi < 1.0);
}

TEST_CASE("alpha-mu sampler moments") {
  const Eigen::ArrayXd e = sample_alpha_mu({2.0, 1, 0.0}, kN, 11);
  CHECK(std::abs(e.mean() - 1.0) < 3e-3);
  CHECK(e.minCoeff() >= 0.0);
  const RfChannelParams ch{3.0, 2, linear_to_db(5.0)};
  const Eigen::ArrayXd x = sample_alpha_mu(ch, kN, 12);
  const double expect = 5.0 * std::tgamma(2.0 + 2.0 / 3.0) / std::tgamma(2.0);
  CHECK(std::abs(x.mean() - expect) < 3.0 * standard_error(x));
}

TEST_CASE("Malaga sampler mean") {
  FsoLinkParams f;
  const Eigen::ArrayXd x = sample_malaga_snr(f, kN, 13);
  CHECK(std::abs(x.mean() - electrical_snr(f)) < 3.0 * standard_error(x));
  f.epsilon = 6.7;
  f.s = 2;
  // Normalized irradiance sqrt(gamma / mu_2) has unit mean.
  const Eigen::ArrayXd y = (sample_malaga_snr(f, kN, 14) / electrical_snr(f)).sqrt();
  CHECK(std::abs(y.mean() - 1.0) < 3.0 * standard_error(y));
}

TEST_CASE("blockage") {
  const Eigen::ArrayXd x = Eigen::ArrayXd::Constant(kN, 2.0);
  CHECK((apply_blockage(x, 0.0, 1) == x).all());
  CHECK((apply_blockage(x, 1.0, 1) == 0.0).all());
  const double zeros = (apply_blockage(x, 0.5, 1) == 0.0).cast<double>().mean();
  CHECK(std::abs(zeros - 0.5) < 0.0015);
  CHECK_THROWS_AS(apply_blockage(x, 1.5, 1), DomainError);
}

TEST_CASE("estimates do not depend on the worker count") {
  const SecrecyConfig c = base_config();
  const McMetrics one = simulate_metrics(c, 200000, 5, 1);
  const McMetrics three = simulate_metrics(c, 200000, 5, 3);
  CHECK(one.sop.estimate == three.sop.estimate);
  CHECK(one.sop_lower.estimate == three.sop_lower.estimate);
  CHECK(one.spsc.estimate == three.spsc.estimate);
  CHECK(one.est.estimate == three.est.estimate);
}

TEST_CASE("disjoint seeds agree within six combined standard errors") {
  const SecrecyConfig c = base_config();
  const McMetrics a = simulate_metrics(c, 200000, 21);
  const McMetrics b = simulate_metrics(c, 200000, 22);
  const double se = std::hypot(a.sop_lower.std_error, b.sop_lower.std_error);
  CHECK(a.sop_lower.estimate != b.sop_lower.estimate);
  CHECK(std::abs(a.sop_lower.estimate - b.sop_lower.estimate) < 6.0 * se);
}

TEST_CASE("event ordering and zero rate") {
  SecrecyConfig c = base_config();
  const McMetrics m = simulate_metrics(c, 100000, 3);
  CHECK(m.sop.estimate >= m.sop_lower.estimate);
  CHECK(m.sop_lower.std_error ==
        doctest::Approx(std::sqrt(m.sop_lower.estimate * (1 - m.sop_lower.estimate) / 1e5)));
  c.target_rate = 0.0;
  const McMetrics z = simulate_metrics(c, 100000, 3);
  CHECK(z.sop.estimate == z.sop_lower.estimate);
  CHECK(z.est.estimate == 0.0);
}

TEST_CASE("exchangeable relay and eavesdropper give SPSC one half") {
  // Scenario II with the transmit limit always active makes gamma_r and
  // gamma_e identically distributed; a fully blocked FSO link removes gamma_o.
  SecrecyConfig c;
  c.rf_sr = {2.0, 2, 5.0};
  c.rf_sp = {2.0, 2, 5.0};
  c.rf_se = {2.0, 2, 5.0};
  c.fso.blockage_p = 1.0;
  c.pc = {80.0, 0.0, Scenario::kII};
  const McMetrics m = simulate_metrics(c, kN, 4);
  CHECK(std::abs(m.spsc.estimate - 0.5) < 3.0 * m.spsc.std_error);
}

TEST_CASE("too few samples are refused") {
  CHECK_THROWS_AS(simulate_metrics(base_config(), 1000, 1), DomainError);
}

TEST_CASE("KS distance bound") {
  // Quantile-placed samples of the uniform law on [0, 1].
  const int n = 10000;
  Eigen::ArrayXd x(n);
  for (int i = 0; i < n; ++i) x(i) = (i + 0.5) / n;
  const KsResult r = ks_distance(x, [](double u) { return std::min(1.0, u); }, 500);
  CHECK(r.lower == doctest::Approx(0.5 / n));
  CHECK(r.upper >= r.lower);
  CHECK(r.upper < r.lower + 2.0 / 500);
  CHECK_THROWS_AS(ks_distance(Eigen::ArrayXd(), [](double) { return 0.0; }), DomainError);
}

}  // TEST_SUITE
