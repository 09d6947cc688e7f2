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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hsec {

namespace {

using nlohmann::json;

const std::vector<std::string> kRequired = {
    "alpha_r", "mu_r",  "phi_r_db", "alpha_p", "mu_p",     "phi_p_db",   "alpha_e",
    "mu_e",    "phi_e_db", "alpha_o", "beta_o", "g",       "omega",      "epsilon",
    "phi_o_db", "psi_q_db", "target_rate"};

const json& field(const json& j, const std::string& key) {
  const auto it = j.find(key);
  if (it == j.end()) throw ConfigError("missing required key '" + key + "'");
  if (!it->is_number()) throw ConfigError(key + " must be a number");
  return *it;
}

double real(const json& j, const std::string& key) {
  const double v = field(j, key).get<double>();
  if (!std::isfinite(v)) throw ConfigError(key + " must be finite");
  return v;
}

double real_or(const json& j, const std::string& key, double fallback) {
  return j.contains(key) ? real(j, key) : fallback;
}

int positive_integer(const json& j, const std::string& key) {
  const double v = field(j, key).get<double>();
  if (!(v >= 1.0) || v != std::floor(v) || v > 1e6) {
    throw ConfigError(key + " must be a positive integer");
  }
  return static_cast<int>(v);
}

int choice(const json& j, const std::string& key, int fallback, int lo, int hi) {
  if (!j.contains(key)) return fallback;
  const double v = field(j, key).get<double>();
  if (v != std::floor(v) || v < lo || v > hi) {
    throw ConfigError(key + " must be " + std::to_string(lo) + " or " + std::to_string(hi));
  }
  return static_cast<int>(v);
}

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
  int line = 1;
  int col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "alpha_r", "mu_r",   "phi_r_db", "alpha_p", "mu_p",    "phi_p_db", "alpha_e",
      "mu_e",    "phi_e_db", "alpha_o", "beta_o", "g",       "omega",    "epsilon",
      "s",       "phi_o_db", "p_o",    "psi_q_db", "psi_t_db", "scenario", "target_rate"};
  return keys;
}

SecrecyConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
  const auto& keys = config_keys();
  for (const auto& item : j.items()) {
    if (std::find(keys.begin(), keys.end(), item.key()) == keys.end()) {
      throw ConfigError("unknown key '" + item.key() + "'");
    }
  }
  SecrecyConfig cfg;
  cfg.rf_sr = {real(j, "alpha_r"), positive_integer(j, "mu_r"), real(j, "phi_r_db")};
  cfg.rf_sp = {real(j, "alpha_p"), positive_integer(j, "mu_p"), real(j, "phi_p_db")};
  cfg.rf_se = {real(j, "alpha_e"), positive_integer(j, "mu_e"), real(j, "phi_e_db")};
  cfg.fso.alpha_o = real(j, "alpha_o");
  cfg.fso.beta_o = positive_integer(j, "beta_o");
  cfg.fso.g = real(j, "g");
  cfg.fso.omega = real(j, "omega");
  cfg.fso.epsilon = real(j, "epsilon");
  cfg.fso.s = choice(j, "s", 1, 1, 2);
  cfg.fso.avg_snr_db = real(j, "phi_o_db");
  cfg.fso.blockage_p = real_or(j, "p_o", 0.0);
  cfg.pc.psi_q_db = real(j, "psi_q_db");
  if (j.contains("psi_t_db")) cfg.pc.psi_t_db = real(j, "psi_t_db");
  cfg.pc.scenario = choice(j, "scenario", 1, 1, 2) == 1 ? Scenario::kI : Scenario::kII;
  cfg.target_rate = real(j, "target_rate");
  try {
    cfg.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

SecrecyConfig parse_config(std::string_view text, std::string_view source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::ostringstream msg;
    msg << source << ":" << line << ":" << col << ": JSON parse error";
    const std::string what = e.what();
    const auto pos = what.rfind(": ");
    if (pos != std::string::npos) msg << what.substr(pos);
    throw ConfigError(msg.str());
  }
  try {
    return config_from_json(j);
  } catch (const ConfigError& e) {
    throw ConfigError(std::string(source) + ": " + e.what());
  }
}

SecrecyConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open configuration file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

nlohmann::ordered_json config_to_json(const SecrecyConfig& cfg) {
  nlohmann::ordered_json j;
  j["alpha_r"] = cfg.rf_sr.alpha;
  j["mu_r"] = cfg.rf_sr.mu;
  j["phi_r_db"] = cfg.rf_sr.avg_snr_db;
  j["alpha_p"] = cfg.rf_sp.alpha;
  j["mu_p"] = cfg.rf_sp.mu;
  j["phi_p_db"] = cfg.rf_sp.avg_snr_db;
  j["alpha_e"] = cfg.rf_se.alpha;
  j["mu_e"] = cfg.rf_se.mu;
  j["phi_e_db"] = cfg.rf_se.avg_snr_db;
  j["alpha_o"] = cfg.fso.alpha_o;
  j["beta_o"] = cfg.fso.beta_o;
  j["g"] = cfg.fso.g;
  j["omega"] = cfg.fso.omega;
  j["epsilon"] = cfg.fso.epsilon;
  j["s"] = cfg.fso.s;
  j["phi_o_db"] = cfg.fso.avg_snr_db;
  j["p_o"] = cfg.fso.blockage_p;
  j["psi_q_db"] = cfg.pc.psi_q_db;
  if (cfg.pc.psi_t_db) j["psi_t_db"] = *cfg.pc.psi_t_db;
  j["scenario"] = static_cast<int>(cfg.pc.scenario);
  j["target_rate"] = cfg.target_rate;
  return j;
}

std::string config_hash(const SecrecyConfig& cfg) {
  const std::string text = config_to_json(cfg).dump();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

SecrecyConfig with_field(const SecrecyConfig& cfg, std::string_view key, double value) {
  const auto& keys = config_keys();
  if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
    throw ConfigError("unknown config field '" + std::string(key) + "'");
  }
  json j = json::parse(config_to_json(cfg).dump());
  j[std::string(key)] = value;
  return config_from_json(j);
}

}  // namespace hsec
