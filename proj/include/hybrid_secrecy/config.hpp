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

#ifndef HYBRID_SECRECY_CONFIG_HPP
#define HYBRID_SECRECY_CONFIG_HPP

#include "hybrid_secrecy/model.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hsec {

/// Keys accepted in a configuration file, in canonical order.
const std::vector<std::string>& config_keys();

/// Parses and validates a JSON configuration. `source` names the input in
/// error messages. Throws ConfigError.
SecrecyConfig parse_config(std::string_view text, std::string_view source = "<config>");
SecrecyConfig config_from_json(const nlohmann::json& j);
SecrecyConfig load_config(const std::string& path);

/// Canonical JSON form: every key present, fixed order, no optional gaps
/// except psi_t_db.
nlohmann::ordered_json config_to_json(const SecrecyConfig& cfg);

/// FNV-1a 64 of the canonical JSON text, as 16 hex digits.
std::string config_hash(const SecrecyConfig& cfg);

/// Returns a copy of `cfg` with the scalar field named by `key` (a config
/// key such as "psi_q_db") set to `value`. Throws ConfigError.
SecrecyConfig with_field(const SecrecyConfig& cfg, std::string_view key, double value);

}  // namespace hsec

#endif  // HYBRID_SECRECY_CONFIG_HPP
