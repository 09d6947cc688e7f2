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

#ifndef HYBRID_SECRECY_RUNNER_HPP
#define HYBRID_SECRECY_RUNNER_HPP

#include "hybrid_secrecy/mc_oracle.hpp"
#include "hybrid_secrecy/secrecy.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hsec {

struct RunOptions {
  SeriesPolicy series;
  specfun::ContourPolicy contour;
  /// 0 means SECRECY_WORKERS or the hardware concurrency.
  int workers = 0;

  /// Sets the series and contour tolerances together.
  void set_tolerance(double tolerance);
};

/// Provenance line written as the first line of every CSV output. It carries
/// no timestamp so identical runs produce identical files.
struct RunManifest {
  std::string config_hash;
  std::string version;
  std::optional<std::uint64_t> seed;
  SeriesPolicy series;
  double contour_tolerance = 0.0;

  std::string line() const;
};

RunManifest make_manifest(const SecrecyConfig& cfg, const RunOptions& opts,
                          std::optional<std::uint64_t> seed = std::nullopt);

std::string_view tool_version();

// eval ----------------------------------------------------------------------

SecrecyResult run_eval(const SecrecyConfig& cfg, Metric metric, const RunOptions& opts);

/// Columns: metric,scenario,value,terms,error_bound,clamped
void write_eval_csv(std::ostream& out, const SecrecyConfig& cfg, const SecrecyResult& r,
                    const RunOptions& opts);

// sweep ---------------------------------------------------------------------

struct SweepSpec {
  std::string axis;  ///< a config key, e.g. "psi_q_db"
  double from = 0.0;
  double to = 0.0;
  int points = 2;
  std::vector<Metric> metrics;

  /// Throws ConfigError.
  void validate() const;
  /// Evenly spaced, in the units of the axis field.
  std::vector<double> grid() const;
};

struct SweepRow {
  double x = 0.0;
  std::vector<std::optional<double>> values;  ///< one per metric; empty on failure
  int terms = 0;
  double error_bound = 0.0;
  std::string error;  ///< "category: message" of the first failure
};

std::vector<SweepRow> run_sweep(const SecrecyConfig& cfg, const SweepSpec& spec,
                                const RunOptions& opts);

/// Columns: <axis>,<metric>...,terms,error_bound,status
void write_sweep_csv(std::ostream& out, const SecrecyConfig& cfg, const SweepSpec& spec,
                     const std::vector<SweepRow>& rows, const RunOptions& opts);

// validate ------------------------------------------------------------------

struct ValidationRow {
  Metric metric = Metric::kSopL;
  double analytic = 0.0;
  mc::McEstimate mc;
  double z = 0.0;
  bool pass = false;
};

struct KsRow {
  std::string channel;
  double distance = 0.0;
  double critical = 0.0;  ///< 1.63 / sqrt(n), the 1% level
};

struct ValidateOptions {
  /// Raises phi_e_db by 10 dB on the analytic side only.
  bool inject_fault = false;
  bool ks = true;
  int ks_grid = 5000;
};

struct ValidationReport {
  std::vector<ValidationRow> metrics;
  std::vector<KsRow> ks;
  bool pass = false;
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

inline constexpr double kValidationZ = 3.0;

ValidationReport run_validate(const SecrecyConfig& cfg, std::size_t n, std::uint64_t seed,
                              const RunOptions& opts, const ValidateOptions& vopts = {});

/// Columns: row,name,analytic,estimate,std_error,statistic,threshold,status
void write_validation_csv(std::ostream& out, const SecrecyConfig& cfg,
                          const ValidationReport& report, const RunOptions& opts);

// sample --------------------------------------------------------------------

enum class SampleChannel { kAlphaMu, kMalaga };

/// Writes n draws, one per line under the header "snr". For alpha-mu the
/// link is one of 'r', 'p', 'e'.
void run_sample(std::ostream& out, const SecrecyConfig& cfg, SampleChannel channel, char link,
                std::size_t n, std::uint64_t seed, const RunOptions& opts);

}  // namespace hsec

#endif  // HYBRID_SECRECY_RUNNER_HPP
