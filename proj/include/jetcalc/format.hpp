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

// Text and JSON forms of polynomials.
//
// Text grammar (whitespace is ignored on input and never printed):
//
//   polynomial := term (('+'|'-') term)*      | '0'
//   term       := [sign] [coeff '*'] factor ('*' factor)*  | [sign] coeff
//   coeff      := integer | integer '/' positive-integer
//   factor     := var ['^' positive-integer]
//   var        := 'x[' j ',' s ']' | 'a[' i ']'
//
// Terms print in decreasing monomial order, factors in increasing variable
// order, coefficients +-1 omitted, so print(parse(s)) == s for any printed s.

#ifndef JETCALC_FORMAT_HPP
#define JETCALC_FORMAT_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "jetcalc/polynomial.hpp"

namespace jetcalc {

std::string to_string(const Monomial& m);
std::string to_string(const Polynomial& p);
Polynomial parse_polynomial(std::string_view text);

/// {"terms":[{"coeff":"p/q","exps":[["x",j,s,e] | ["a",i,e], ...]}, ...]}
nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace jetcalc

#endif  // JETCALC_FORMAT_HPP
