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

#include "hybrid_secrecy/model.hpp"

#include "hybrid_secrecy/errors.hpp"

#include <cmath>
#include <string>

namespace hsec {

void PowerConstraints::validate() const {
  if (!std::isfinite(psi_q_db)) throw DomainError("psi_q_db must be finite");
  if (psi_t_db && !std::isfinite(*psi_t_db)) {
    throw DomainError("psi_t_db must be finite");
  }
  if (scenario == Scenario::kII && !psi_t_db) {
    throw DomainError("Scenario II needs a transmit limit psi_t_db");
  }
}

double PowerConstraints::psi_t() const {
  if (!psi_t_db) throw DomainError("no transmit limit psi_t_db set");
  return db_to_linear(*psi_t_db);
}

void SeriesPolicy::validate() const {
  if (!(tolerance > 0.0 && tolerance < 1.0)) {
    throw DomainError("series tolerance must lie in (0, 1)");
  }
  if (max_terms < 10) throw DomainError("series max_terms must be at least 10");
}

void SecrecyConfig::validate() const {
  rf_sr.validate();
  rf_sp.validate();
  rf_se.validate();
  fso.validate();
  pc.validate();
  if (!(target_rate >= 0.0) || !std::isfinite(target_rate)) {
    throw DomainError("target rate must be >= 0, got " + std::to_string(target_rate));
  }
}

double SecrecyConfig::sigma() const { return std::exp2(target_rate); }

}  // namespace hsec
