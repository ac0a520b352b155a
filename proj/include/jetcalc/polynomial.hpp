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

#ifndef JETCALC_POLYNOMIAL_HPP
#define JETCALC_POLYNOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jetcalc/rational.hpp"

namespace jetcalc {

/// A polynomial variable: either the jet coordinate x[j,s] (the s-th
/// derivative of component j, weight s) or the group parameter a[i]
/// (weight i).
class VarId {
 public:
  enum class Kind : std::uint8_t { param = 0, jet = 1 };

  static VarId jet(int component, int order);
  static VarId param(int index);

  Kind kind() const { return kind_; }
  bool is_jet() const { return kind_ == Kind::jet; }
  bool is_param() const { return kind_ == Kind::param; }

  int component() const { return first_; }  // jet only
  int order() const { return second_; }     // jet only
  int index() const { return first_; }      // param only

  int weight() const { return is_jet() ? second_ : first_; }

  /// Packed sort key. Parameters sort before jets; jets by (component, order).
  std::uint32_t key() const {
    return (static_cast<std::uint32_t>(kind_) << 30) |
           (static_cast<std::uint32_t>(first_) << 15) | static_cast<std::uint32_t>(second_);
  }

  friend bool operator==(VarId a, VarId b) { return a.key() == b.key(); }
  friend std::strong_ordering operator<=>(VarId a, VarId b) { return a.key() <=> b.key(); }

  std::string to_string() const;

 private:
  VarId(Kind kind, std::uint16_t first, std::uint16_t second)
      : kind_(kind), first_(first), second_(second) {}

  Kind kind_;
  std::uint16_t first_;
  std::uint16_t second_;
};

struct Factor {
  VarId var;
  unsigned exponent;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Power product of variables with positive exponents, factors sorted by
/// VarId. Ordered by weighted degree first, then lexicographically (the
/// monomial with the larger exponent on the smallest differing variable is
/// greater).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(VarId var, unsigned exponent = 1);
  /// Factors may come in any order and repeat; zero exponents are dropped.
  explicit Monomial(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int weight() const { return weight_; }
  unsigned total_degree() const;
  unsigned exponent(VarId var) const;
  /// Copy with the exponent of `var` lowered by one; requires exponent(var) > 0.
  Monomial without_one(VarId var) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::size_t hash() const;

 private:
  std::vector<Factor> factors_;
  int weight_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Sparse polynomial over Q in canonical form: no zero coefficients, terms
/// sorted in decreasing monomial order, so structural equality is equality.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(const Rational& c);                    // NOLINT(google-explicit-constructor)
  explicit Polynomial(const Monomial& m, const Rational& c = Rational(1));
  static Polynomial variable(VarId var) { return Polynomial(Monomial(var)); }
  /// Collects like terms and drops zeros; input order is irrelevant.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  const Term& leading_term() const { return terms_.front(); }

  /// Common weighted degree of all terms; nullopt for zero or mixed weights.
  std::optional<int> weight() const;
  bool is_weighted_homogeneous() const;

  std::vector<VarId> variables() const;
  bool has_params() const;
  int max_jet_order() const;
  int max_component() const;

  /// Positive rational c with every coefficient of P/c an integer and the
  /// integer coefficients coprime; zero for the zero polynomial.
  Rational content() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  friend class PolynomialAccumulator;
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& p, unsigned exponent);

/// Hash-based sum used to build large polynomials before a single sort.
class PolynomialAccumulator {
 public:
  void add(const Monomial& m, const Rational& c);
  void add(const Polynomial& p, const Rational& scale = Rational(1));
  /// add(p * m * c) without materializing the product.
  void add_shifted(const Polynomial& p, const Monomial& m, const Rational& c);
  Polynomial finish();

 private:
  std::unordered_map<Monomial, Rational, MonomialHash> acc_;
};

using Substitution = std::map<VarId, Polynomial>;

/// Ring homomorphism sending each variable to its image. Every variable of
/// `p` must be mapped, otherwise a missing-variable error names it.
Polynomial substitute(const Polynomial& p, const Substitution& sigma);
/// Same, but unmapped variables are kept as themselves.
Polynomial substitute_partial(const Polynomial& p, const Substitution& sigma);

/// The unique derivation extending `rule`; every variable must be covered.
Polynomial derive(const Polynomial& p, const Substitution& rule);
/// Same, but unmapped variables are treated as constants.
Polynomial derive_partial(const Polynomial& p, const Substitution& rule);
/// Formal partial derivative d/d(var).
Polynomial partial_derivative(const Polynomial& p, VarId var);

}  // namespace jetcalc

#endif  // JETCALC_POLYNOMIAL_HPP
