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

#ifndef HYBRID_SECRECY_MC_ORACLE_HPP
#define HYBRID_SECRECY_MC_ORACLE_HPP

#include "hybrid_secrecy/channels.hpp"
#include "hybrid_secrecy/model.hpp"

#include <Eigen/Core>

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace hsec::mc {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;
  static Counter generate(Counter counter, Key key);
};

/// Independent substream identified by (seed, role, chunk).
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint32_t role, std::uint32_t chunk);

  std::uint32_t next_u32();
  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform();
  double normal();
  /// Standard Gamma(shape), Marsaglia-Tsang.
  double gamma(double shape);

 private:
  Philox4x32::Counter counter_;
  Philox4x32::Key key_;
  Philox4x32::Counter block_{};
  int used_ = 4;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Roles keep the draws of different channel gains on disjoint substreams.
enum class Role : std::uint32_t {
  kGainR = 1,
  kGainP = 2,
  kGainE = 3,
  kFso = 4,
  kBlockage = 5,
};

/// Samples are produced in chunks of this size, one substream per chunk, so
/// results do not depend on the number of workers.
inline constexpr std::size_t kChunkSize = std::size_t{1} << 16;

/// Worker count from SECRECY_WORKERS (default: hardware concurrency).
int worker_count();

/// Runs fn(chunk, begin, end) over [0, n) in kChunkSize pieces on `workers` threads.
void for_each_chunk(std::size_t n, int workers,
                    const std::function<void(std::uint32_t, std::size_t, std::size_t)>& fn);

Eigen::ArrayXd sample_alpha_mu(const RfChannelParams& ch, std::size_t n, std::uint64_t seed,
                               Role role = Role::kGainR, int workers = 0);

/// Malaga turbulence times pointing error, mapped to the electrical SNR.
Eigen::ArrayXd sample_malaga_snr(const FsoLinkParams& fso, std::size_t n, std::uint64_t seed,
                                 int workers = 0);

/// Zeroes each entry independently with probability p_o.
Eigen::ArrayXd apply_blockage(Eigen::ArrayXd samples, double p_o, std::uint64_t seed,
                              int workers = 0);

struct SampleBatch {
  Eigen::ArrayXd gain_p;   ///< S-P interference link, alpha-mu(Phi_p)
  Eigen::ArrayXd gain_r;   ///< S-R link, alpha-mu(Phi_r)
  Eigen::ArrayXd gamma_e;  ///< S-E link, alpha-mu(Phi_e)
  Eigen::ArrayXd gamma_o;  ///< FSO SNR after blockage (atom at 0)
  std::uint64_t seed = 0;
  std::size_t n = 0;
};

SampleBatch sample_batch(const SecrecyConfig& cfg, std::size_t n, std::uint64_t seed,
                         int workers = 0);

/// Relay SNR of the RF hop for one draw under the configured power constraints.
double relay_snr(const PowerConstraints& pc, double gain_r, double gain_p);

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

struct McMetrics {
  McEstimate sop;        ///< frac{gamma_f <= sigma gamma_e + sigma - 1}
  McEstimate sop_lower;  ///< frac{gamma_f <= sigma gamma_e}
  McEstimate spsc;       ///< 1 - frac{gamma_f <= gamma_e}
  McEstimate est;        ///< target_rate (1 - SOP)
  McEstimate est_lower;  ///< target_rate (1 - SOP_L), the quantity the closed form computes
};

McMetrics estimate_metrics(const SecrecyConfig& cfg, const SampleBatch& batch);

inline constexpr std::size_t kMinSimulationSamples = 10000;

/// Throws DomainError when n < kMinSimulationSamples.
McMetrics simulate_metrics(const SecrecyConfig& cfg, std::size_t n, std::uint64_t seed,
                           int workers = 0);

struct KsResult {
  double lower = 0.0;  ///< max deviation at the evaluated points
  double upper = 0.0;  ///< bound on the supremum over the whole line
  int evaluations = 0;
};

/// Kolmogorov-Smirnov distance between the empirical CDF of `samples` and a
/// monotone `cdf`. The CDF is evaluated at up to `grid` order statistics; the
/// bound between them uses monotonicity of both functions.
KsResult ks_distance(Eigen::ArrayXd samples, const std::function<double(double)>& cdf,
                     int grid = 5000);

}  // namespace hsec::mc

#endif  // HYBRID_SECRECY_MC_ORACLE_HPP
