// Copyright 2026 The jetcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef JETCALC_ERROR_HPP
#define JETCALC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace jetcalc {

enum class ErrorKind {
  parse,
  missing_variable,
  invalid_argument,
  non_invertible,
  order_overflow,
  non_homogeneous,
  zero_degree,
  rank,
  bounds,
  dependent_solutions,
  instance_too_large,
  insufficient_range,
  io,
};

/// Stable kebab-case name, printed by the CLI on the diagnostic stream.
constexpr std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "parse-error";
    case ErrorKind::missing_variable: return "missing-variable";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::non_invertible: return "non-invertible";
    case ErrorKind::order_overflow: return "order-overflow";
    case ErrorKind::non_homogeneous: return "non-homogeneous";
    case ErrorKind::zero_degree: return "zero-degree";
    case ErrorKind::rank: return "rank-error";
    case ErrorKind::bounds: return "bounds-error";
    case ErrorKind::dependent_solutions: return "dependent-solutions";
    case ErrorKind::instance_too_large: return "instance-too-large";
    case ErrorKind::insufficient_range: return "insufficient-range";
    case ErrorKind::io: return "io-error";
  }
  return "error";
}

/// Every domain failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace jetcalc

#endif  // JETCALC_ERROR_HPP
