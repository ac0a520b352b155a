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

// Fiber dimensions. The weight-m part of the Green-Griffiths fiber is
// spanned by the monomials of weighted degree m in x[j,s]; its U_k-invariant
// part is the common kernel of the infinitesimal generators.

#ifndef JETCALC_DIMENSION_HPP
#define JETCALC_DIMENSION_HPP

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "jetcalc/invariants.hpp"
#include "jetcalc/jet.hpp"

namespace jetcalc {

inline constexpr std::size_t kDefaultSizeLimit = 5000;

struct HilbertTable {
  JetConfig config;
  int m_max = 0;
  std::vector<Integer> coefficients;  // c_0 .. c_{m_max}

  nlohmann::json to_json() const;
};

/// Coefficients of prod_{s=1..k} (1 - q^s)^(-r) up to q^m_max.
HilbertTable hilbert_gg(const JetConfig& config, int m_max);

/// Every monomial of weighted degree exactly m, in decreasing canonical order.
std::vector<Monomial> enumerate_monomials(const JetConfig& config, int m);

struct InvariantBasis {
  JetConfig config;
  int weight = 0;
  Group group = Group::unipotent;
  std::vector<JetPolynomial> basis;

  std::size_t dimension() const { return basis.size(); }

  /// {"k","r","m","group":"Uk","dimension","basis":[<polynomial json>...]}
  nlohmann::json to_json() const;
  static InvariantBasis from_json(const nlohmann::json& j);
};

struct MatrixShape {
  std::size_t rows = 0;
  std::size_t cols = 0;
};

/// Kernel of the stacked generators delta_2..delta_k on the weight-m
/// monomials. `shape`, when given, receives the size of the system solved.
InvariantBasis invariant_basis(const JetConfig& config, int m,
                               std::size_t size_limit = kDefaultSizeLimit,
                               MatrixShape* shape = nullptr);

/// Same space computed independently as the fixed points of the formal
/// unipotent pullback. Slower; used as a verifier.
InvariantBasis invariant_basis_by_pullback(const JetConfig& config, int m,
                                           std::size_t size_limit = kDefaultSizeLimit);

struct GenerationReport {
  int spanned_dim = 0;       // dim(product span  intersected with invariants)
  int invariant_dim = 0;
  int product_span_dim = 0;  // dim of the product span itself
  int depth = 0;
  std::vector<JetPolynomial> cogenerators;  // complete the span to the invariants

  nlohmann::json to_json() const;
};

/// Spans the weight-m products of the generators and their total
/// derivatives up to `depth` (k-1 when negative) and compares with the
/// invariant fiber. Generators must certify as relative invariants.
GenerationReport generation_check(const JetConfig& config, int m,
                                  const std::vector<JetPolynomial>& generators, int depth = -1,
                                  std::size_t size_limit = kDefaultSizeLimit);

struct ResidueClassGrowth {
  int residue = 0;
  int samples = 0;
  int degree = -1;             // smallest d with vanishing (d+1)-th differences
  Integer leading_difference;  // common value of the (kr-1)-th differences
  bool ok = false;
};

struct GrowthReport {
  JetConfig config;
  int m_max = 0;
  int modulus = 1;  // lcm(1..k)
  int expected_degree = 0;  // kr - 1
  std::vector<ResidueClassGrowth> classes;
  bool ok = false;

  nlohmann::json to_json() const;
};

/// Checks that c_m is, on each residue class mod lcm(1..k), a polynomial in
/// m of degree exactly kr-1. Needs m_max >= 2 k r lcm(1..k).
GrowthReport growth_exponent_check(const JetConfig& config, int m_max);

}  // namespace jetcalc

#endif  // JETCALC_DIMENSION_HPP
