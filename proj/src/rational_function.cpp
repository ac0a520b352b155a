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

#include "jetcalc/rational_function.hpp"

#include "jetcalc/error.hpp"
#include "jetcalc/format.hpp"

namespace jetcalc {

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (denominator_.is_zero())
    throw Error(ErrorKind::invalid_argument, "rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (numerator_.is_zero()) {
    denominator_ = Polynomial(1);
    return;
  }
  Rational scale = Rational(1) / denominator_.content();
  if (denominator_.leading_term().coeff.sign() < 0) scale = -scale;
  if (!scale.is_one()) {
    numerator_ *= scale;
    denominator_ *= scale;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.numerator_ = -out.numerator_;
  return out;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.denominator_ == b.denominator_)
    return RationalFunction(a.numerator_ + b.numerator_, a.denominator_);
  return RationalFunction(a.numerator_ * b.denominator_ + b.numerator_ * a.denominator_,
                          a.denominator_ * b.denominator_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.numerator_ * b.numerator_, a.denominator_ * b.denominator_);
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.numerator_ * b.denominator_ == b.numerator_ * a.denominator_;
}

std::string RationalFunction::to_string() const {
  if (denominator_ == Polynomial(1)) return jetcalc::to_string(numerator_);
  return "(" + jetcalc::to_string(numerator_) + ")/(" + jetcalc::to_string(denominator_) + ")";
}

}  // namespace jetcalc
