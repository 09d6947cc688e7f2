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
// hsec: command-line front end.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 numerical
// failure, 3 validation FAIL.

#include "hybrid_secrecy/config.hpp"
#include "hybrid_secrecy/errors.hpp"
#include "hybrid_secrecy/runner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>

namespace {

using namespace hsec;

constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitValidationFail = 3;

int exit_code(const Error& e) {
  switch (e.category()) {
    case ErrorCategory::kIntegrity:
    case ErrorCategory::kConvergence:
    case ErrorCategory::kContour:
      return kExitNumerical;
    default:
      return kExitUsage;
  }
}

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw ConfigError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

const std::map<std::string, Metric> kMetrics = {
    {"sop", Metric::kSopL}, {"spsc", Metric::kSpsc}, {"est", Metric::kEst}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secrecy metrics of underlay cognitive hybrid RF/FSO links"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<double> tolerance;
  app.add_option("--tolerance", tolerance,
                 "Series and contour tolerance in (0, 1) (default 1e-8)");

  std::string config_path;
  std::string out_path;

  auto* eval = app.add_subcommand("eval", "Evaluate one metric");
  std::string metric_name;
  int scenario = 0;
  eval->add_option("--config", config_path, "JSON configuration")->required();
  eval->add_option("--metric", metric_name, "sop | spsc | est")
      ->required()
      ->check(CLI::IsMember({"sop", "spsc", "est"}));
  eval->add_option("--scenario", scenario, "1 or 2; overrides the config")
      ->check(CLI::IsMember({1, 2}));
  eval->add_option("--out", out_path, "CSV output file (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "Sweep one config field");
  SweepSpec spec;
  std::vector<std::string> metric_names;
  sweep->add_option("--config", config_path, "JSON configuration")->required();
  sweep->add_option("--axis", spec.axis, "Config key to vary, e.g. psi_q_db")->required();
  sweep->add_option("--from", spec.from, "First axis value")->required();
  sweep->add_option("--to", spec.to, "Last axis value")->required();
  sweep->add_option("--points", spec.points, "Number of points (>= 2)")->required();
  sweep->add_option("--metrics", metric_names, "Comma-separated list of sop, spsc, est")
      ->required()
      ->delimiter(',')
      ->check(CLI::IsMember({"sop", "spsc", "est"}));
  sweep->add_option("--out", out_path, "CSV output file (default stdout)");

  auto* validate = app.add_subcommand("validate", "Compare closed forms with Monte Carlo");
  std::size_t samples = 1000000;
  std::uint64_t seed = 1;
  ValidateOptions vopts;
  bool no_ks = false;
  validate->add_option("--config", config_path, "JSON configuration")->required();
  validate->add_option("--samples", samples, "Monte Carlo sample count (>= 10000)");
  validate->add_option("--seed", seed, "RNG seed");
  validate->add_flag("--inject-fault", vopts.inject_fault,
                     "Raise phi_e_db by 10 dB on the analytic side only");
  validate->add_flag("--no-ks", no_ks, "Skip the Kolmogorov-Smirnov rows");
  validate->add_option("--out", out_path, "CSV output file (default stdout)");

  auto* sample = app.add_subcommand("sample", "Draw channel SNR samples");
  std::string channel;
  std::string link = "r";
  std::size_t count = 0;
  sample->add_option("--channel", channel, "alpha-mu | malaga")
      ->required()
      ->check(CLI::IsMember({"alpha-mu", "malaga"}));
  sample->add_option("--link", link, "alpha-mu link: r, p or e")
      ->check(CLI::IsMember({"r", "p", "e"}));
  sample->add_option("--config", config_path, "JSON configuration")->required();
  sample->add_option("--n", count, "Number of draws")->required()->check(CLI::PositiveNumber);
  sample->add_option("--seed", seed, "RNG seed")->required();
  sample->add_option("--out", out_path, "CSV output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    RunOptions opts;
    if (tolerance) opts.set_tolerance(*tolerance);
    SecrecyConfig cfg = load_config(config_path);

    if (*eval) {
      if (scenario != 0) {
        cfg.pc.scenario = scenario == 1 ? Scenario::kI : Scenario::kII;
        try {
          cfg.validate();
        } catch (const DomainError& e) {
          throw ConfigError(e.what());
        }
      }
      const SecrecyResult r = run_eval(cfg, kMetrics.at(metric_name), opts);
      Output out(out_path);
      write_eval_csv(out.stream(), cfg, r, opts);
      return 0;
    }
    if (*sweep) {
      for (const auto& m : metric_names) spec.metrics.push_back(kMetrics.at(m));
      const auto rows = run_sweep(cfg, spec, opts);
      Output out(out_path);
      write_sweep_csv(out.stream(), cfg, spec, rows, opts);
      return 0;
    }
    if (*validate) {
      vopts.ks = !no_ks;
      const ValidationReport rep = run_validate(cfg, samples, seed, opts, vopts);
      Output out(out_path);
      write_validation_csv(out.stream(), cfg, rep, opts);
      if (!rep.pass) {
        std::cerr << "hsec: validation FAIL:";
        for (const auto& r : rep.metrics) {
          if (!r.pass) std::cerr << ' ' << to_string(r.metric) << " (z=" << r.z << ")";
        }
        std::cerr << '\n';
        return kExitValidationFail;
      }
      return 0;
    }
    if (*sample) {
      Output out(out_path);
      run_sample(out.stream(), cfg,
                 channel == "malaga" ? SampleChannel::kMalaga : SampleChannel::kAlphaMu,
                 link[0], count, seed, opts);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "hsec: " << to_string(e.category()) << ": " << e.what() << '\n';
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "hsec: error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}
