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

#ifndef HYBRID_SECRECY_ERRORS_HPP
#define HYBRID_SECRECY_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hsec {

enum class ErrorCategory {
  kDomain,
  kContour,
  kConvergence,
  kUnsupported,
  kIntegrity,
  kConfig,
};

inline std::string_view to_string(ErrorCategory category);

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorCategory::kDomain, what) {}
};

/// No admissible Mellin–Barnes contour exists for the requested parameters.
class ContourError : public Error {
 public:
  explicit ContourError(const std::string& what)
      : Error(ErrorCategory::kContour, what) {}
};

/// Quadrature or series did not reach the requested tolerance. Carries the
/// last two estimates so callers can judge how far off they are.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double last, double previous)
      : Error(ErrorCategory::kConvergence, what),
        last_(last),
        previous_(previous) {}

  double last_estimate() const noexcept { return last_; }
  double previous_estimate() const noexcept { return previous_; }

 private:
  double last_;
  double previous_;
};

/// Parameters outside the family a closed form was derived for.
class UnsupportedParameters : public Error {
 public:
  explicit UnsupportedParameters(const std::string& what)
      : Error(ErrorCategory::kUnsupported, what) {}
};

/// A probability left [0, 1] by more than roundoff.
class NumericalIntegrityError : public Error {
 public:
  explicit NumericalIntegrityError(const std::string& what)
      : Error(ErrorCategory::kIntegrity, what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what)
      : Error(ErrorCategory::kConfig, what) {}
};

inline std::string_view to_string(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kDomain:
      return "domain";
    case ErrorCategory::kContour:
      return "contour";
    case ErrorCategory::kConvergence:
      return "convergence";
    case ErrorCategory::kUnsupported:
      return "unsupported";
    case ErrorCategory::kIntegrity:
      return "integrity";
    case ErrorCategory::kConfig:
      return "config";
  }
  return "unknown";
}

}  // namespace hsec

#endif  // HYBRID_SECRECY_ERRORS_HPP
