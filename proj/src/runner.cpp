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

#include "hybrid_secrecy/runner.hpp"

#include "hybrid_secrecy/config.hpp"
#include "hybrid_secrecy/cun_cdf.hpp"
#include "hybrid_secrecy/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

namespace hsec {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

std::string describe(const std::exception& e) {
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    return std::string(to_string(err->category())) + ": " + err->what();
  }
  return std::string("error: ") + e.what();
}

}  // namespace

void RunOptions::set_tolerance(double tolerance) {
  if (!(tolerance > 0.0 && tolerance < 1.0)) {
    throw ConfigError("--tolerance must lie in (0, 1)");
  }
  series.tolerance = tolerance;
  contour.tolerance = tolerance;
}

std::string_view tool_version() { return HSEC_VERSION; }

std::string RunManifest::line() const {
  std::ostringstream out;
  out << "# hsec version=" << version << " config_hash=" << config_hash;
  out << " seed=" << (seed ? std::to_string(*seed) : std::string("none"));
  out << " series_tolerance=" << num(series.tolerance)
      << " series_max_terms=" << series.max_terms
      << " compensated=" << (series.compensated ? "true" : "false")
      << " contour_tolerance=" << num(contour_tolerance);
  return out.str();
}

RunManifest make_manifest(const SecrecyConfig& cfg, const RunOptions& opts,
                          std::optional<std::uint64_t> seed) {
  return {config_hash(cfg), std::string(tool_version()), seed, opts.series,
          opts.contour.tolerance};
}

SecrecyResult run_eval(const SecrecyConfig& cfg, Metric metric, const RunOptions& opts) {
  return evaluate(cfg, metric, opts.series, opts.contour);
}

void write_eval_csv(std::ostream& out, const SecrecyConfig& cfg, const SecrecyResult& r,
                    const RunOptions& opts) {
  out << make_manifest(cfg, opts).line() << '\n';
  out << "metric,scenario,value,terms,error_bound,clamped\n";
  out << to_string(r.metric) << ',' << static_cast<int>(r.scenario) << ',' << num(r.value)
      << ',' << r.terms << ',' << num(r.truncation_bound) << ','
      << (r.clamped ? "true" : "false") << '\n';
}

void SweepSpec::validate() const {
  const auto& keys = config_keys();
  if (std::find(keys.begin(), keys.end(), axis) == keys.end()) {
    throw ConfigError("sweep axis '" + axis + "' is not a config field");
  }
  if (points < 2) throw ConfigError("sweep needs at least 2 points");
  if (!std::isfinite(from) || !std::isfinite(to)) throw ConfigError("sweep bounds must be finite");
  if (metrics.empty()) throw ConfigError("sweep needs at least one metric");
}

std::vector<double> SweepSpec::grid() const {
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i) {
    g[i] = i + 1 == points ? to : from + (to - from) * i / (points - 1);
  }
  return g;
}

std::vector<SweepRow> run_sweep(const SecrecyConfig& cfg, const SweepSpec& spec,
                                const RunOptions& opts) {
  spec.validate();
  const std::vector<double> xs = spec.grid();
  std::vector<SweepRow> rows(xs.size());
  auto point = [&](std::size_t i) {
    SweepRow& row = rows[i];
    row.x = xs[i];
    row.values.assign(spec.metrics.size(), std::nullopt);
    SecrecyConfig c;
    try {
      c = with_field(cfg, spec.axis, xs[i]);
    } catch (const std::exception& e) {
      row.error = describe(e);
      return;
    }
    for (std::size_t m = 0; m < spec.metrics.size(); ++m) {
      try {
        const SecrecyResult r = evaluate(c, spec.metrics[m], opts.series, opts.contour);
        row.values[m] = r.value;
        row.terms += r.terms;
        row.error_bound = std::max(row.error_bound, r.truncation_bound);
      } catch (const std::exception& e) {
        if (row.error.empty()) row.error = describe(e);
      }
    }
  };
  const int workers = std::min<int>(opts.workers > 0 ? opts.workers : mc::worker_count(),
                                    static_cast<int>(xs.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < xs.size(); ++i) point(i);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < xs.size(); i = next++) point(i);
    });
  }
  for (auto& t : pool) t.join();
  return rows;
}

void write_sweep_csv(std::ostream& out, const SecrecyConfig& cfg, const SweepSpec& spec,
                     const std::vector<SweepRow>& rows, const RunOptions& opts) {
  out << make_manifest(cfg, opts).line() << '\n';
  out << spec.axis;
  for (Metric m : spec.metrics) out << ',' << to_string(m);
  out << ",terms,error_bound,status\n";
  for (const auto& row : rows) {
    out << num(row.x);
    for (const auto& v : row.values) out << ',' << (v ? num(*v) : std::string());
    out << ',' << row.terms << ',' << num(row.error_bound) << ','
        << (row.error.empty() ? std::string("ok") : csv_cell("error " + row.error)) << '\n';
  }
}

ValidationReport run_validate(const SecrecyConfig& cfg, std::size_t n, std::uint64_t seed,
                              const RunOptions& opts, const ValidateOptions& vopts) {
  if (n < mc::kMinSimulationSamples) {
    throw DomainError("validate needs --samples >= " +
                      std::to_string(mc::kMinSimulationSamples));
  }
  cfg.validate();
  const mc::SampleBatch batch = mc::sample_batch(cfg, n, seed, opts.workers);
  const mc::McMetrics mc = mc::estimate_metrics(cfg, batch);

  SecrecyConfig analytic_cfg = cfg;
  if (vopts.inject_fault) analytic_cfg.rf_se.avg_snr_db += 10.0;

  ValidationReport rep;
  rep.n = n;
  rep.seed = seed;
  const double dn = static_cast<double>(n);
  auto add = [&](Metric metric, const mc::McEstimate& est, double scale) {
    ValidationRow row;
    row.metric = metric;
    row.analytic = evaluate(analytic_cfg, metric, opts.series, opts.contour).value;
    row.mc = est;
    // A zero empirical variance (no or all hits) leaves one count of resolution.
    const double se = std::max(est.std_error, scale / dn);
    row.z = (row.analytic - est.estimate) / se;
    row.pass = std::abs(row.z) <= kValidationZ;
    rep.metrics.push_back(row);
  };
  add(Metric::kSopL, mc.sop_lower, 1.0);
  add(Metric::kSpsc, mc.spsc, 1.0);
  add(Metric::kEst, mc.est_lower, cfg.target_rate);
  rep.pass = std::all_of(rep.metrics.begin(), rep.metrics.end(),
                         [](const ValidationRow& r) { return r.pass; });

  if (vopts.ks) {
    const double critical = 1.63 / std::sqrt(dn);
    auto ks = [&](const std::string& name, const Eigen::ArrayXd& samples, auto&& cdf) {
      const mc::KsResult r = mc::ks_distance(samples, cdf, vopts.ks_grid);
      rep.ks.push_back({name, r.upper, critical});
    };
    ks("alpha_mu_sr", batch.gain_r, [&](double x) { return alpha_mu_cdf(cfg.rf_sr, x); });
    ks("alpha_mu_sp", batch.gain_p, [&](double x) { return alpha_mu_cdf(cfg.rf_sp, x); });
    ks("alpha_mu_se", batch.gamma_e, [&](double x) { return alpha_mu_cdf(cfg.rf_se, x); });
    ks("fso_blocked", batch.gamma_o,
       [&](double x) { return fso_blocked_cdf(cfg.fso, x, opts.contour); });
    Eigen::ArrayXd relay(batch.gain_r.size());
    Eigen::ArrayXd hybrid(batch.gain_r.size());
    for (Eigen::Index i = 0; i < relay.size(); ++i) {
      relay(i) = mc::relay_snr(cfg.pc, batch.gain_r(i), batch.gain_p(i));
      hybrid(i) = std::max(relay(i), batch.gamma_o(i));
    }
    if (cfg.pc.scenario == Scenario::kI) {
      ks("rf_relay", relay, [&](double x) {
        return cdf_rf_scenario1_general(cfg.rf_sr, cfg.rf_sp, cfg.pc, x, opts.contour);
      });
      ks("hybrid", hybrid, [&](double x) { return cdf_hybrid_scenario1(cfg, x, opts.contour); });
    } else {
      ks("rf_relay", relay, [&](double x) {
        return cdf_rf_scenario2(cfg.rf_sr, cfg.rf_sp, cfg.pc, x, opts.series);
      });
      ks("hybrid", hybrid,
         [&](double x) { return cdf_hybrid_scenario2(cfg, x, opts.series, opts.contour); });
    }
  }
  return rep;
}

void write_validation_csv(std::ostream& out, const SecrecyConfig& cfg,
                          const ValidationReport& report, const RunOptions& opts) {
  out << make_manifest(cfg, opts, report.seed).line() << " samples=" << report.n << '\n';
  out << "row,name,analytic,estimate,std_error,statistic,threshold,status\n";
  double worst = 0.0;
  for (const auto& r : report.metrics) {
    worst = std::max(worst, std::abs(r.z));
    out << "metric," << to_string(r.metric) << ',' << num(r.analytic) << ','
        << num(r.mc.estimate) << ',' << num(r.mc.std_error) << ',' << num(r.z) << ','
        << num(kValidationZ) << ',' << (r.pass ? "PASS" : "FAIL") << '\n';
  }
  for (const auto& k : report.ks) {
    out << "ks," << k.channel << ",,,," << num(k.distance) << ',' << num(k.critical) << ','
        << (k.distance <= k.critical ? "within" : "above") << '\n';
  }
  out << "verdict,max_abs_z,,,," << num(worst) << ',' << num(kValidationZ) << ','
      << (report.pass ? "PASS" : "FAIL") << '\n';
}

void run_sample(std::ostream& out, const SecrecyConfig& cfg, SampleChannel channel, char link,
                std::size_t n, std::uint64_t seed, const RunOptions& opts) {
  cfg.validate();
  Eigen::ArrayXd draws;
  if (channel == SampleChannel::kMalaga) {
    draws = mc::sample_malaga_snr(cfg.fso, n, seed, opts.workers);
  } else {
    switch (link) {
      case 'r':
        draws = mc::sample_alpha_mu(cfg.rf_sr, n, seed, mc::Role::kGainR, opts.workers);
        break;
      case 'p':
        draws = mc::sample_alpha_mu(cfg.rf_sp, n, seed, mc::Role::kGainP, opts.workers);
        break;
      case 'e':
        draws = mc::sample_alpha_mu(cfg.rf_se, n, seed, mc::Role::kGainE, opts.workers);
        break;
      default:
        throw ConfigError("alpha-mu link must be one of r, p, e");
    }
  }
  out << make_manifest(cfg, opts, seed).line() << '\n' << "snr\n";
  char buf[32];
  for (Eigen::Index i = 0; i < draws.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g\n", draws(i));
    out << buf;
  }
}

}  // namespace hsec
