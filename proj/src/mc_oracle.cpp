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

#include "hybrid_secrecy/mc_oracle.hpp"

#include "hybrid_secrecy/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

namespace hsec::mc {

namespace {

constexpr std::uint32_t kM0 = 0xD2511F53u;
constexpr std::uint32_t kM1 = 0xCD9E8D57u;
constexpr std::uint32_t kW0 = 0x9E3779B9u;
constexpr std::uint32_t kW1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

}  // namespace

Philox4x32::Counter Philox4x32::generate(Counter ctr, Key key) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kW0;
      key[1] += kW1;
    }
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kM0, ctr[0], hi0, lo0);
    mulhilo(kM1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

RandomStream::RandomStream(std::uint64_t seed, std::uint32_t role, std::uint32_t chunk)
    : counter_{0u, chunk, role, 0u},
      key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)} {}

std::uint32_t RandomStream::next_u32() {
  if (used_ == 4) {
    block_ = Philox4x32::generate(counter_, key_);
    if (++counter_[0] == 0u) ++counter_[3];
    used_ = 0;
  }
  return block_[used_++];
}

double RandomStream::uniform() {
  const std::uint64_t hi = next_u32() >> 5;  // 27 bits
  const std::uint64_t lo = next_u32() >> 6;  // 26 bits
  return (static_cast<double>((hi << 26) | lo) + 0.5) * 0x1p-53;
}

double RandomStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double r = std::sqrt(-2.0 * std::log(uniform()));
  const double phi = 2.0 * std::numbers::pi * uniform();
  spare_ = r * std::sin(phi);
  has_spare_ = true;
  return r * std::cos(phi);
}

double RandomStream::gamma(double shape) {
  if (!(shape > 0.0)) throw DomainError("gamma variate needs a positive shape");
  if (shape < 1.0) {
    const double g = gamma(shape + 1.0);
    return g * std::exp(std::log(uniform()) / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  while (true) {
    double x = 0.0;
    double v = 0.0;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

int worker_count() {
  if (const char* env = std::getenv("SECRECY_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(std::min(v, 1024L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void for_each_chunk(std::size_t n, int workers,
                    const std::function<void(std::uint32_t, std::size_t, std::size_t)>& fn) {
  const std::size_t chunks = (n + kChunkSize - 1) / kChunkSize;
  if (workers <= 0) workers = worker_count();
  workers = static_cast<int>(std::min<std::size_t>(workers, std::max<std::size_t>(chunks, 1)));
  auto run = [&](std::size_t c) {
    const std::size_t begin = c * kChunkSize;
    fn(static_cast<std::uint32_t>(c), begin, std::min(n, begin + kChunkSize));
  };
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) run(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t c = next++; c < chunks; c = next++) run(c);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

namespace {

void require_samples(std::size_t n) {
  if (n < 1) throw DomainError("sample count must be >= 1");
  if (n > std::numeric_limits<std::uint32_t>::max() / 2 * kChunkSize) {
    throw DomainError("sample count too large");
  }
}

}  // namespace

Eigen::ArrayXd sample_alpha_mu(const RfChannelParams& ch, std::size_t n, std::uint64_t seed,
                               Role role, int workers) {
  ch.validate();
  require_samples(n);
  const double inv_a = 1.0 / ch.alpha_t();
  const double delta = ch.delta();
  Eigen::ArrayXd out(static_cast<Eigen::Index>(n));
  for_each_chunk(n, workers, [&](std::uint32_t chunk, std::size_t b, std::size_t e) {
    RandomStream rs(seed, static_cast<std::uint32_t>(role), chunk);
    for (std::size_t i = b; i < e; ++i) {
      out(static_cast<Eigen::Index>(i)) = std::pow(rs.gamma(ch.mu) / delta, inv_a);
    }
  });
  return out;
}

Eigen::ArrayXd sample_malaga_snr(const FsoLinkParams& fso, std::size_t n, std::uint64_t seed,
                                 int workers) {
  fso.validate();
  require_samples(n);
  const double e2 = fso.epsilon * fso.epsilon;
  const double mean_i = (fso.g + fso.omega) * e2 / (e2 + 1.0);
  const double mu_s = electrical_snr(fso);
  const double z_sd = std::sqrt(0.5 * fso.g);
  Eigen::ArrayXd out(static_cast<Eigen::Index>(n));
  for_each_chunk(n, workers, [&](std::uint32_t chunk, std::size_t b, std::size_t e) {
    RandomStream rs(seed, static_cast<std::uint32_t>(Role::kFso), chunk);
    for (std::size_t i = b; i < e; ++i) {
      const double x = rs.gamma(fso.alpha_o) / fso.alpha_o;
      // Circular Z makes the LOS phase irrelevant.
      const double amp = std::sqrt(rs.gamma(fso.beta_o) * fso.omega / fso.beta_o);
      const double re = amp + z_sd * rs.normal();
      const double im = z_sd * rs.normal();
      const double pointing = std::exp(std::log(rs.uniform()) / e2);
      const double irr = x * (re * re + im * im) * pointing;
      out(static_cast<Eigen::Index>(i)) = mu_s * std::pow(irr / mean_i, fso.s);
    }
  });
  return out;
}

Eigen::ArrayXd apply_blockage(Eigen::ArrayXd samples, double p_o, std::uint64_t seed,
                              int workers) {
  if (!(p_o >= 0.0 && p_o <= 1.0)) throw DomainError("blockage probability must lie in [0, 1]");
  if (p_o == 0.0) return samples;
  const std::size_t n = static_cast<std::size_t>(samples.size());
  if (n == 0) return samples;
  for_each_chunk(n, workers, [&](std::uint32_t chunk, std::size_t b, std::size_t e) {
    RandomStream rs(seed, static_cast<std::uint32_t>(Role::kBlockage), chunk);
    for (std::size_t i = b; i < e; ++i) {
      if (rs.uniform() < p_o) samples(static_cast<Eigen::Index>(i)) = 0.0;
    }
  });
  return samples;
}

SampleBatch sample_batch(const SecrecyConfig& cfg, std::size_t n, std::uint64_t seed,
                         int workers) {
  cfg.validate();
  SampleBatch b;
  b.seed = seed;
  b.n = n;
  b.gain_p = sample_alpha_mu(cfg.rf_sp, n, seed, Role::kGainP, workers);
  b.gain_r = sample_alpha_mu(cfg.rf_sr, n, seed, Role::kGainR, workers);
  b.gamma_e = sample_alpha_mu(cfg.rf_se, n, seed, Role::kGainE, workers);
  b.gamma_o = apply_blockage(sample_malaga_snr(cfg.fso, n, seed, workers),
                             cfg.fso.blockage_p, seed, workers);
  return b;
}

double relay_snr(const PowerConstraints& pc, double gain_r, double gain_p) {
  const double allowed = pc.psi_q() / gain_p;
  if (pc.scenario == Scenario::kI) return allowed * gain_r;
  return std::min(allowed, pc.psi_t()) * gain_r;
}

McMetrics simulate_metrics(const SecrecyConfig& cfg, std::size_t n, std::uint64_t seed,
                           int workers) {
  if (n < kMinSimulationSamples) {
    throw DomainError("simulate_metrics needs n >= " + std::to_string(kMinSimulationSamples) +
                      " (standard error would exceed 0.005)");
  }
  return estimate_metrics(cfg, sample_batch(cfg, n, seed, workers));
}

McMetrics estimate_metrics(const SecrecyConfig& cfg, const SampleBatch& b) {
  const std::size_t n = b.n;
  const std::uint64_t seed = b.seed;
  if (n == 0) throw DomainError("estimate_metrics needs a non-empty batch");
  const double sigma = cfg.sigma();
  std::size_t sop = 0;
  std::size_t sop_l = 0;
  std::size_t zero_capacity = 0;
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(n); ++i) {
    const double gf = std::max(relay_snr(cfg.pc, b.gain_r(i), b.gain_p(i)), b.gamma_o(i));
    const double ge = b.gamma_e(i);
    if (gf <= sigma * ge + sigma - 1.0) ++sop;
    if (gf <= sigma * ge) ++sop_l;
    if (gf <= ge) ++zero_capacity;
  }
  const double dn = static_cast<double>(n);
  auto estimate = [&](double p) {
    return McEstimate{p, std::sqrt(p * (1.0 - p) / dn), n, seed};
  };
  McMetrics m;
  m.sop = estimate(sop / dn);
  m.sop_lower = estimate(sop_l / dn);
  m.spsc = estimate(1.0 - zero_capacity / dn);
  m.est = estimate(1.0 - m.sop.estimate);
  m.est.estimate *= cfg.target_rate;
  m.est.std_error *= cfg.target_rate;
  m.est_lower = estimate(1.0 - m.sop_lower.estimate);
  m.est_lower.estimate *= cfg.target_rate;
  m.est_lower.std_error *= cfg.target_rate;
  return m;
}

KsResult ks_distance(Eigen::ArrayXd samples, const std::function<double(double)>& cdf,
                     int grid) {
  const Eigen::Index n = samples.size();
  if (n == 0) throw DomainError("ks_distance needs samples");
  if (grid < 2) throw DomainError("ks_distance needs a grid of at least 2 points");
  double* first = samples.data();
  double* last = first + n;
  std::sort(first, last);
  if (!(*first >= 0.0)) throw DomainError("ks_distance expects non-negative samples");

  std::vector<double> points;
  const Eigen::Index m = std::min<Eigen::Index>(grid, n);
  for (Eigen::Index j = 0; j < m; ++j) {
    const double x = first[j * (n - 1) / (m - 1)];
    if (points.empty() || x > points.back()) points.push_back(x);
  }
  const double dn = static_cast<double>(n);
  KsResult r;
  std::vector<double> f(points.size());
  std::vector<double> right(points.size());  // F_n(x)
  std::vector<double> left(points.size());   // F_n(x-)
  for (std::size_t j = 0; j < points.size(); ++j) {
    f[j] = cdf(points[j]);
    right[j] = (std::upper_bound(first, last, points[j]) - first) / dn;
    left[j] = (std::lower_bound(first, last, points[j]) - first) / dn;
    r.lower = std::max(r.lower, std::abs(f[j] - right[j]));
  }
  r.evaluations = static_cast<int>(points.size());
  r.upper = r.lower;
  // Below the smallest sample F_n = 0.
  const double f_below = points[0] > 0.0 ? cdf(std::nextafter(points[0], 0.0)) : 0.0;
  r.upper = std::max(r.upper, f_below);
  for (std::size_t j = 0; j + 1 < points.size(); ++j) {
    r.upper = std::max({r.upper, f[j + 1] - right[j], left[j + 1] - f[j]});
  }
  r.upper = std::max(r.upper, 1.0 - f.back());
  return r;
}

}  // namespace hsec::mc
