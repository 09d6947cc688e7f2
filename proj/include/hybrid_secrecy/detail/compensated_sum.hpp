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

#ifndef HYBRID_SECRECY_DETAIL_COMPENSATED_SUM_HPP
#define HYBRID_SECRECY_DETAIL_COMPENSATED_SUM_HPP

#include <cmath>

namespace hsec::detail {

/// Neumaier summation; plain summation when disabled.
class CompensatedSum {
 public:
  explicit CompensatedSum(bool enabled = true) : enabled_(enabled) {}

  void add(double x) {
    if (!enabled_) {
      sum_ += x;
      return;
    }
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  bool enabled_;
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace hsec::detail

#endif  // HYBRID_SECRECY_DETAIL_COMPENSATED_SUM_HPP
