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

#ifndef JETCALC_INVARIANTS_HPP
#define JETCALC_INVARIANTS_HPP

#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "jetcalc/jet.hpp"
#include "jetcalc/rational_function.hpp"

namespace jetcalc {

/// G_k (all reparametrizations) or its unipotent radical U_k (a_1 = 1).
enum class Group { full, unipotent };

std::string_view group_name(Group g);  // "Gk" / "Uk"
Group parse_group(std::string_view name);

enum class BracketConvention { normalized, merker };

BracketConvention parse_convention(std::string_view name);

struct InvarianceReport {
  enum class Status { relative_invariant, unipotent_invariant_only, not_invariant };

  Status status = Status::not_invariant;
  Group group = Group::full;
  std::optional<int> weight;   // relative_invariant only
  Polynomial witness;          // not_invariant only: leading term of the defect
  bool restricted = false;     // G_k asked for a non-homogeneous input

  bool invariant() const { return status != Status::not_invariant; }

  /// {"status":"relative_invariant","weight":w} | {"status":"not_invariant",
  /// "witness":"..."} | {"status":"unipotent_invariant_only"}
  nlohmann::json to_json() const;
  std::string to_text() const;
};

struct CoordinateChangeResult {
  int component = 2;
  int order = 1;
  JetPolynomial numerator;
  int denominator_exponent = 1;  // power of x[1,1]
};

/// Monic operator L(y) = y^(n) + c_1 y^(n-1) + ... + c_n y.
struct PicardOperator {
  int order = 0;
  std::vector<RationalFunction> coefficients;  // c_1 .. c_n

  RationalFunction apply(const JetPolynomial& y) const;
};

/// Infinitesimal generator of the one-parameter subgroup t + e t^j of U_k.
struct DerivationRule {
  int index = 2;
  Substitution rule;  // image of every jet variable of the config

  JetPolynomial apply(const JetPolynomial& p) const;
};

/// det[D^(i-1)(args_j)].
JetPolynomial wronskian(const std::vector<JetPolynomial>& args);

/// normalized: (1/p) Q D(P) - (1/q) P D(Q); merker: q Q D(P) - p P D(Q),
/// where p, q are the weights of P and Q. A zero argument gives zero.
JetPolynomial bracket(const JetPolynomial& p, const JetPolynomial& q,
                      BracketConvention convention = BracketConvention::normalized);

/// Entries of level `level`: pairwise brackets of first derivatives at
/// level 2, then bracket(x[i,1], q) for every earlier entry q and every i.
/// Zero brackets are dropped.
std::vector<JetPolynomial> q_sequence(const JetConfig& config, int level,
                                      BracketConvention convention = BracketConvention::normalized);

/// Exact verdict from the pullback by the formal element of order config.k.
InvarianceReport check_invariance(const JetPolynomial& p, Group group);

std::vector<DerivationRule> infinitesimal_generators(const JetConfig& config);

/// s-th derivative of f_j o f_1^{-1}, written N / x[1,1]^(2s-1).
CoordinateChangeResult coordinate_change(const JetConfig& config, int component, int order);

/// Throws dependent-solutions when the Wronskian of `solutions` vanishes.
PicardOperator picard_operator(const std::vector<JetPolynomial>& solutions);

/// True iff the Wronskian vanishes, i.e. the arguments are linearly
/// dependent over the constants.
bool wronskian_dependence_test(const std::vector<JetPolynomial>& args);

}  // namespace jetcalc

#endif  // JETCALC_INVARIANTS_HPP
