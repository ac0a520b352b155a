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

// Random generators shared by the unit tests and the acceptance runner.

#ifndef JETCALC_TESTS_SUPPORT_HPP
#define JETCALC_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "jetcalc/jet.hpp"
#include "jetcalc/linalg.hpp"

namespace jetcalc::testing {

using Rng = std::mt19937;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Small nonzero rational p/q with |p| <= 9, 1 <= q <= 4.
inline Rational random_rational(Rng& rng, bool allow_zero = false) {
  int p = 0;
  do {
    p = uniform(rng, -9, 9);
  } while (p == 0 && !allow_zero);
  return Rational(Integer(p), Integer(uniform(rng, 1, 4)));
}

inline Monomial random_monomial(Rng& rng, const JetConfig& config, int max_factors,
                                int params = 0) {
  Monomial m;
  const int factors = uniform(rng, 0, max_factors);
  for (int i = 0; i < factors; ++i) {
    if (params > 0 && uniform(rng, 0, 3) == 0)
      m = m * Monomial(VarId::param(uniform(rng, 1, params)));
    else
      m = m * Monomial(VarId::jet(uniform(rng, 1, config.r), uniform(rng, 1, config.k)));
  }
  return m;
}

/// Sum of up to `terms` random terms in the jets of `config` and,
/// optionally, the parameters a[1..params].
inline Polynomial random_polynomial(Rng& rng, const JetConfig& config, int terms = 4,
                                    int max_factors = 3, int params = 0) {
  PolynomialAccumulator acc;
  const int n = uniform(rng, 1, terms);
  for (int i = 0; i < n; ++i)
    acc.add(random_monomial(rng, config, max_factors, params), random_rational(rng));
  return acc.finish();
}

/// Weighted-homogeneous random polynomial of weight m (possibly zero).
inline Polynomial random_homogeneous(Rng& rng, const JetConfig& config, int m, int terms = 3) {
  PolynomialAccumulator acc;
  for (int i = 0; i < terms; ++i) {
    Monomial mono;
    int left = m;
    while (left > 0) {
      const int s = uniform(rng, 1, std::min(left, config.k));
      mono = mono * Monomial(VarId::jet(uniform(rng, 1, config.r), s));
      left -= s;
    }
    acc.add(mono, random_rational(rng));
  }
  return acc.finish();
}

inline Reparametrization random_reparametrization(Rng& rng, int k) {
  std::vector<Rational> c;
  c.push_back(random_rational(rng));
  for (int i = 2; i <= k; ++i) c.push_back(random_rational(rng, true));
  return Reparametrization::concrete(c);
}

}  // namespace jetcalc::testing

#endif  // JETCALC_TESTS_SUPPORT_HPP
