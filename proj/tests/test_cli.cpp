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

#include "hybrid_secrecy/config.hpp"
#include "hybrid_secrecy/errors.hpp"
#include "hybrid_secrecy/runner.hpp"

#include <doctest.h>

#include <sstream>
#include <string>

using namespace hsec;

namespace {

const char* const kBase = R"({
  "alpha_r": 2, "mu_r": 2, "phi_r_db": 15,
  "alpha_p": 2, "mu_p": 2, "phi_p_db": 10,
  "alpha_e": 2, "mu_e": 2, "phi_e_db": 10,
  "alpha_o": 2.296, "beta_o": 2, "g": 2, "omega": 1, "epsilon": 1,
  "phi_o_db": 10, "p_o": 0.1, "psi_q_db": 0, "target_rate": 0.05
})";

std::string message_of(const char* text) {
  try {
    parse_config(text, "cfg.json");
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

std::string replace(std::string text, const std::string& from, const std::string& to) {
  text.replace(text.find(from), from.size(), to);
  return text;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("config defaults and round trip") {
  const SecrecyConfig c = parse_config(kBase);
  CHECK(c.fso.s == 1);
  CHECK(c.pc.scenario == Scenario::kI);
  CHECK_FALSE(c.pc.psi_t_db.has_value());
  CHECK(c.rf_sr.avg_snr_db == 15.0);
  const SecrecyConfig back = config_from_json(nlohmann::json::parse(config_to_json(c).dump()));
  CHECK(config_hash(back) == config_hash(c));
  CHECK(config_hash(c).size() == 16);
  CHECK(config_hash(with_field(c, "phi_e_db", 11.0)) != config_hash(c));
}

TEST_CASE("config rejections carry a useful message") {
  const std::string base = kBase;
  CHECK(message_of(replace(base, "\"mu_r\": 2", "\"mu_r\": 2.5").c_str()) ==
        "cfg.json: mu_r must be a positive integer");
  CHECK(message_of(replace(base, "\"g\": 2", "\"g\": 2, \"gain\": 1").c_str()) ==
        "cfg.json: unknown key 'gain'");
  CHECK(message_of(replace(base, "\"omega\": 1,", "").c_str()) ==
        "cfg.json: missing required key 'omega'");
  const std::string parse = message_of("{\n  \"alpha_r\": 2,\n  oops\n}");
  CHECK(parse.rfind("cfg.json:3:", 0) == 0);
  const std::string s2 = message_of(replace(base, "\"psi_q_db\": 0", "\"scenario\": 2, \"psi_q_db\": 0").c_str());
  CHECK(s2.find("psi_t") != std::string::npos);
  CHECK_THROWS_AS(load_config("/nonexistent/cfg.json"), ConfigError);
}

TEST_CASE("with_field") {
  const SecrecyConfig c = parse_config(kBase);
  CHECK(with_field(c, "psi_q_db", 7.5).pc.psi_q_db == 7.5);
  CHECK(with_field(c, "mu_e", 3).rf_se.mu == 3);
  CHECK_THROWS_AS(with_field(c, "psi", 1.0), ConfigError);
  CHECK_THROWS_AS(with_field(c, "mu_e", 2.5), ConfigError);
}

TEST_CASE("eval identities") {
  SecrecyConfig c = parse_config(kBase);
  const RunOptions opts;
  const double sop = run_eval(c, Metric::kSopL, opts).value;
  c.target_rate = 0.0;
  const double sop0 = run_eval(c, Metric::kSopL, opts).value;
  CHECK(run_eval(c, Metric::kSpsc, opts).value + sop0 == 1.0);
  CHECK(run_eval(c, Metric::kEst, opts).value == 0.0);
  CHECK(sop0 <= sop);

  std::ostringstream out;
  write_eval_csv(out, c, run_eval(c, Metric::kSpsc, opts), opts);
  const auto l = lines(out.str());
  REQUIRE(l.size() == 3);
  CHECK(l[0].rfind("# hsec version=", 0) == 0);
  CHECK(l[0].find("config_hash=" + config_hash(c)) != std::string::npos);
  CHECK(l[1] == "metric,scenario,value,terms,error_bound,clamped");
  CHECK(l[2].rfind("spsc,1,", 0) == 0);
}

TEST_CASE("tolerance option reaches both policies") {
  RunOptions opts;
  opts.set_tolerance(1e-6);
  CHECK(opts.series.tolerance == 1e-6);
  CHECK(opts.contour.tolerance == 1e-6);
  CHECK_THROWS_AS(opts.set_tolerance(2.0), ConfigError);
}

TEST_CASE("sweep output") {
  const SecrecyConfig c = parse_config(kBase);
  RunOptions opts;
  opts.workers = 2;
  SweepSpec spec{"psi_q_db", -5.0, 5.0, 3, {Metric::kSopL, Metric::kEst}};
  const auto rows = run_sweep(c, spec, opts);
  REQUIRE(rows.size() == 3);
  CHECK(rows[2].x == 5.0);
  CHECK(*rows[0].values[0] > *rows[2].values[0]);
  std::ostringstream out;
  write_sweep_csv(out, c, spec, rows, opts);
  const auto l = lines(out.str());
  REQUIRE(l.size() == 5);
  CHECK(l[1] == "psi_q_db,sop,est,terms,error_bound,status");
  CHECK(l[2].substr(l[2].size() - 3) == ",ok");

  // A point outside the domain is reported in its row; the others still run.
  SweepSpec bad{"p_o", 0.5, 1.5, 2, {Metric::kSopL}};
  const auto brows = run_sweep(c, bad, opts);
  CHECK(brows[0].error.empty());
  CHECK_FALSE(brows[1].error.empty());
  CHECK_FALSE(brows[1].values[0].has_value());
  std::ostringstream bout;
  write_sweep_csv(bout, c, bad, brows, opts);
  CHECK(lines(bout.str())[3].find(",\"error config: ") != std::string::npos);

  CHECK_THROWS_AS(run_sweep(c, SweepSpec{"nope", 0, 1, 2, {Metric::kSopL}}, opts), ConfigError);
  CHECK_THROWS_AS(run_sweep(c, SweepSpec{"p_o", 0, 1, 1, {Metric::kSopL}}, opts), ConfigError);
}

TEST_CASE("validate is deterministic and catches a planted fault") {
  const SecrecyConfig c = parse_config(kBase);
  RunOptions opts;
  ValidateOptions v;
  v.ks = false;
  auto report_text = [&](const ValidateOptions& vo, int workers) {
    RunOptions o = opts;
    o.workers = workers;
    std::ostringstream out;
    write_validation_csv(out, c, run_validate(c, 100000, 9, o, vo), o);
    return out.str();
  };
  const std::string a = report_text(v, 1);
  CHECK(a == report_text(v, 2));
  CHECK(a.find("seed=9") != std::string::npos);
  CHECK(a.substr(a.size() - 5) == "PASS\n");

  v.inject_fault = true;
  const ValidationReport bad = run_validate(c, 100000, 9, opts, v);
  CHECK_FALSE(bad.pass);
  CHECK_THROWS_AS(run_validate(c, 1000, 9, opts), DomainError);
}

TEST_CASE("sample writes one draw per line") {
  const SecrecyConfig c = parse_config(kBase);
  std::ostringstream out;
  run_sample(out, c, SampleChannel::kAlphaMu, 'e', 10000, 3, RunOptions{});
  const auto l = lines(out.str());
  REQUIRE(l.size() == 10002);
  CHECK(l[1] == "snr");
  std::ostringstream again;
  run_sample(again, c, SampleChannel::kAlphaMu, 'e', 10000, 3, RunOptions{});
  CHECK(again.str() == out.str());
}

}  // TEST_SUITE
