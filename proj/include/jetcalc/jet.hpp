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

// The k-jet model.
//
// A k-jet of a curve f = (f_1, ..., f_r) through the origin is recorded by
// the undivided derivatives x[j,s] = f_j^(s)(0), 1 <= s <= k. Reparametrizing
// by phi(t) = a_1 t + ... + a_k t^k (a_1 != 0) replaces f by f o phi; the
// induced map on jet polynomials is `pullback`. The divided coordinates
// f^(s)(0)/s! transform by right multiplication with the Faa di Bruno
// matrix; that form is only used as a second route for cross-checking.

#ifndef JETCALC_JET_HPP
#define JETCALC_JET_HPP

#include <optional>
#include <string>
#include <vector>

#include "jetcalc/polynomial.hpp"

namespace jetcalc {

struct JetConfig {
  int k = 1;  // jet order
  int r = 1;  // number of components

  JetConfig() = default;
  JetConfig(int order, int rank);

  /// x[j,s] for j = 1..r, s = 1..k, component-major.
  std::vector<VarId> variables() const;
  int fiber_dimension() const { return k * r; }
  bool contains(VarId v) const {
    return v.is_jet() && v.component() <= r && v.order() <= k;
  }

  friend bool operator==(const JetConfig&, const JetConfig&) = default;
};

/// A polynomial in jet variables (and possibly group parameters) whose jet
/// variables all lie inside `config`.
class JetPolynomial {
 public:
  JetPolynomial() = default;
  JetPolynomial(Polynomial body, JetConfig config);
  /// Smallest config holding every jet variable of `body`.
  static JetPolynomial infer(Polynomial body);

  const Polynomial& body() const { return body_; }
  const JetConfig& config() const { return config_; }
  std::optional<int> weight() const { return body_.weight(); }
  bool is_zero() const { return body_.is_zero(); }

  friend bool operator==(const JetPolynomial& a, const JetPolynomial& b) {
    return a.body_ == b.body_;
  }

 private:
  Polynomial body_;
  JetConfig config_;
};

/// Smallest config containing both.
JetConfig join(const JetConfig& a, const JetConfig& b);

/// Truncated series phi(t) = a_1 t + ... + a_k t^k. Coefficients are
/// polynomials: constants for a concrete element, a[i] for the formal one.
class Reparametrization {
 public:
  static Reparametrization identity(int k);
  /// a_i = a[i] for every i.
  static Reparametrization formal(int k);
  /// a_1 = 1, a_i = a[i] for i >= 2.
  static Reparametrization formal_unipotent(int k);
  /// Throws non-invertible if a_1 = 0.
  static Reparametrization concrete(const std::vector<Rational>& coefficients);
  /// Arbitrary polynomial coefficients (no invertibility check).
  static Reparametrization from_coefficients(std::vector<Polynomial> coefficients);

  int order() const { return static_cast<int>(coeffs_.size()); }
  /// a_i, 1-based.
  const Polynomial& coefficient(int i) const { return coeffs_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<Polynomial>& coefficients() const { return coeffs_; }

  bool is_concrete() const;
  bool is_unipotent() const { return coeffs_.front() == Polynomial(1); }

  /// "a_1,a_2,...,a_k" with each coefficient in polynomial text form.
  std::string to_string() const;

  friend bool operator==(const Reparametrization&, const Reparametrization&) = default;

 private:
  explicit Reparametrization(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs)) {}
  std::vector<Polynomial> coeffs_;
};

/// k x k matrix, 1-based accessors. Entry (s,j) is the sum over ordered
/// compositions j = i_1 + ... + i_s of a_{i_1} ... a_{i_s}.
class FaaDiBrunoMatrix {
 public:
  explicit FaaDiBrunoMatrix(std::vector<std::vector<Polynomial>> entries)
      : entries_(std::move(entries)) {}

  int order() const { return static_cast<int>(entries_.size()); }
  const Polynomial& at(int row, int col) const {
    return entries_.at(static_cast<std::size_t>(row - 1)).at(static_cast<std::size_t>(col - 1));
  }
  const std::vector<std::vector<Polynomial>>& entries() const { return entries_; }

  friend FaaDiBrunoMatrix operator*(const FaaDiBrunoMatrix& a, const FaaDiBrunoMatrix& b);
  friend bool operator==(const FaaDiBrunoMatrix&, const FaaDiBrunoMatrix&) = default;

 private:
  std::vector<std::vector<Polynomial>> entries_;
};

/// Matrix of the formal element (a_i = a[i]).
FaaDiBrunoMatrix faa_di_bruno(int k);
FaaDiBrunoMatrix faa_di_bruno(const Reparametrization& phi);

/// phi o psi truncated past degree k.
Reparametrization compose(const Reparametrization& phi, const Reparametrization& psi);
/// Truncated compositional inverse of a concrete element.
Reparametrization invert(const Reparametrization& phi);

/// P(jet(f o phi)) expressed in the jet of f. Parameters occurring in P are
/// left untouched.
JetPolynomial pullback(const JetPolynomial& p, const Reparametrization& phi);

/// Derivation with D(x[j,s]) = x[j,s+1] and D(a[i]) = 0. The result lives
/// in the config (k+1, r).
JetPolynomial total_derivative(const JetPolynomial& p);
/// Applies the total derivative `times` times.
JetPolynomial total_derivative(const JetPolynomial& p, int times);

}  // namespace jetcalc

#endif  // JETCALC_JET_HPP
