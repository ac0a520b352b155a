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

#ifndef JETCALC_RATIONAL_FUNCTION_HPP
#define JETCALC_RATIONAL_FUNCTION_HPP

#include <string>

#include "jetcalc/polynomial.hpp"

namespace jetcalc {

/// Quotient of polynomials. No polynomial gcd is taken; the pair is only
/// scaled so that the denominator has coprime integer coefficients and a
/// positive leading coefficient. Zero is stored as 0/1.
class RationalFunction {
 public:
  RationalFunction() : denominator_(1) {}
  RationalFunction(Polynomial numerator, Polynomial denominator = Polynomial(1));  // NOLINT

  const Polynomial& numerator() const { return numerator_; }
  const Polynomial& denominator() const { return denominator_; }
  bool is_zero() const { return numerator_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);

  /// Mathematical equality (cross multiplication), not representation equality.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  /// "N" when the denominator is 1, otherwise "(N)/(D)".
  std::string to_string() const;

 private:
  void normalize();

  Polynomial numerator_;
  Polynomial denominator_;
};

}  // namespace jetcalc

#endif  // JETCALC_RATIONAL_FUNCTION_HPP
