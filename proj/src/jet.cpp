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

#include "jetcalc/jet.hpp"

#include <algorithm>
#include <functional>

#include "jetcalc/error.hpp"
#include "jetcalc/format.hpp"

namespace jetcalc {

JetConfig::JetConfig(int order, int rank) : k(order), r(rank) {
  if (order < 1 || rank < 1)
    throw Error(ErrorKind::invalid_argument, "jet config needs k >= 1 and r >= 1");
}

std::vector<VarId> JetConfig::variables() const {
  std::vector<VarId> vars;
  for (int j = 1; j <= r; ++j)
    for (int s = 1; s <= k; ++s) vars.push_back(VarId::jet(j, s));
  return vars;
}

JetConfig join(const JetConfig& a, const JetConfig& b) {
  return JetConfig(std::max(a.k, b.k), std::max(a.r, b.r));
}

JetPolynomial::JetPolynomial(Polynomial body, JetConfig config)
    : body_(std::move(body)), config_(config) {
  for (VarId v : body_.variables()) {
    if (v.is_jet() && !config_.contains(v))
      throw Error(ErrorKind::bounds, "jet variable " + v.to_string() + " outside config (k=" +
                                         std::to_string(config_.k) +
                                         ", r=" + std::to_string(config_.r) + ")");
  }
}

JetPolynomial JetPolynomial::infer(Polynomial body) {
  const JetConfig config(std::max(1, body.max_jet_order()), std::max(1, body.max_component()));
  return JetPolynomial(std::move(body), config);
}

// ---------------------------------------------------- Reparametrization

Reparametrization Reparametrization::identity(int k) {
  if (k < 1) throw Error(ErrorKind::invalid_argument, "truncation order must be >= 1");
  std::vector<Polynomial> c(static_cast<std::size_t>(k));
  c[0] = Polynomial(1);
  return Reparametrization(std::move(c));
}

Reparametrization Reparametrization::formal(int k) {
  if (k < 1) throw Error(ErrorKind::invalid_argument, "truncation order must be >= 1");
  std::vector<Polynomial> c;
  for (int i = 1; i <= k; ++i) c.push_back(Polynomial::variable(VarId::param(i)));
  return Reparametrization(std::move(c));
}

Reparametrization Reparametrization::formal_unipotent(int k) {
  Reparametrization phi = formal(k);
  phi.coeffs_[0] = Polynomial(1);
  return phi;
}

Reparametrization Reparametrization::concrete(const std::vector<Rational>& coefficients) {
  if (coefficients.empty())
    throw Error(ErrorKind::invalid_argument, "truncation order must be >= 1");
  if (coefficients.front().is_zero())
    throw Error(ErrorKind::non_invertible, "reparametrization has a_1 = 0");
  std::vector<Polynomial> c;
  for (const Rational& q : coefficients) c.emplace_back(q);
  return Reparametrization(std::move(c));
}

Reparametrization Reparametrization::from_coefficients(std::vector<Polynomial> coefficients) {
  if (coefficients.empty())
    throw Error(ErrorKind::invalid_argument, "truncation order must be >= 1");
  return Reparametrization(std::move(coefficients));
}

bool Reparametrization::is_concrete() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Polynomial& p) { return p.is_constant(); });
}

std::string Reparametrization::to_string() const {
  std::string out;
  for (const Polynomial& c : coeffs_) {
    if (!out.empty()) out += ',';
    out += jetcalc::to_string(c);
  }
  return out;
}

// ------------------------------------------------------ series helpers

namespace {

// Coefficients c[0..k] of a power series truncated past t^k.
using Series = std::vector<Polynomial>;

Series series_of(const Reparametrization& phi) {
  Series s(static_cast<std::size_t>(phi.order()) + 1);
  for (int i = 1; i <= phi.order(); ++i) s[static_cast<std::size_t>(i)] = phi.coefficient(i);
  return s;
}

Series truncated_product(const Series& a, const Series& b) {
  const std::size_t n = a.size();
  Series out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// powers[l] = phi(t)^l truncated, l = 0..k.
std::vector<Series> series_powers(const Reparametrization& phi) {
  const Series base = series_of(phi);
  std::vector<Series> powers;
  Series one(base.size());
  one[0] = Polynomial(1);
  powers.push_back(one);
  for (int l = 1; l <= phi.order(); ++l) powers.push_back(truncated_product(powers.back(), base));
  return powers;
}

}  // namespace

// ------------------------------------------------------- Faa di Bruno

FaaDiBrunoMatrix operator*(const FaaDiBrunoMatrix& a, const FaaDiBrunoMatrix& b) {
  const std::size_t n = a.entries_.size();
  if (b.entries_.size() != n) throw Error(ErrorKind::invalid_argument, "matrix order mismatch");
  std::vector<std::vector<Polynomial>> out(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) out[i][j] += a.entries_[i][l] * b.entries_[l][j];
  return FaaDiBrunoMatrix(std::move(out));
}

FaaDiBrunoMatrix faa_di_bruno(int k) { return faa_di_bruno(Reparametrization::formal(k)); }

FaaDiBrunoMatrix faa_di_bruno(const Reparametrization& phi) {
  const int k = phi.order();
  std::vector<std::vector<Polynomial>> m(static_cast<std::size_t>(k),
                                         std::vector<Polynomial>(static_cast<std::size_t>(k)));
  // Walk every ordered composition explicitly; entry (s,j) collects the
  // compositions of j into s positive parts.
  std::vector<int> parts;
  std::function<void(int, const Polynomial&)> walk = [&](int sum, const Polynomial& product) {
    if (!parts.empty()) {
      m[parts.size() - 1][static_cast<std::size_t>(sum - 1)] += product;
    }
    for (int i = 1; sum + i <= k; ++i) {
      parts.push_back(i);
      walk(sum + i, product * phi.coefficient(i));
      parts.pop_back();
    }
  };
  walk(0, Polynomial(1));
  return FaaDiBrunoMatrix(std::move(m));
}

// ----------------------------------------------------------- group law

Reparametrization compose(const Reparametrization& phi, const Reparametrization& psi) {
  if (phi.order() != psi.order())
    throw Error(ErrorKind::invalid_argument, "compose: truncation orders differ");
  const std::vector<Series> psi_powers = series_powers(psi);
  std::vector<Polynomial> out(static_cast<std::size_t>(phi.order()));
  for (int n = 1; n <= phi.order(); ++n) {
    Polynomial c;
    for (int i = 1; i <= n; ++i)
      c += phi.coefficient(i) * psi_powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)];
    out[static_cast<std::size_t>(n - 1)] = std::move(c);
  }
  return Reparametrization::from_coefficients(std::move(out));
}

Reparametrization invert(const Reparametrization& phi) {
  if (!phi.is_concrete())
    throw Error(ErrorKind::invalid_argument, "invert needs a concrete reparametrization");
  const Rational a1 = phi.coefficient(1).constant_term();
  if (a1.is_zero()) throw Error(ErrorKind::non_invertible, "reparametrization has a_1 = 0");
  const int k = phi.order();
  // Solve phi(psi(t)) = t one order at a time: the t^n coefficient is
  // a_1 psi_n plus terms in psi_1..psi_{n-1}.
  std::vector<Rational> psi(static_cast<std::size_t>(k), Rational(0));
  psi[0] = Rational(1) / a1;
  for (int n = 2; n <= k; ++n) {
    const Reparametrization trial = Reparametrization::concrete(psi);
    const Rational residual =
        compose(phi, trial).coefficient(n).constant_term();
    psi[static_cast<std::size_t>(n - 1)] = -residual / a1;
  }
  return Reparametrization::concrete(psi);
}

// ------------------------------------------------------------- action

JetPolynomial pullback(const JetPolynomial& p, const Reparametrization& phi) {
  const int k = phi.order();
  if (p.body().max_jet_order() > k)
    throw Error(ErrorKind::order_overflow,
                "pullback: polynomial uses order " + std::to_string(p.body().max_jet_order()) +
                    " > truncation order " + std::to_string(k));
  const std::vector<Series> powers = series_powers(phi);
  // f_j(phi(t)) = sum_l x[j,l]/l! phi(t)^l, so the s-th derivative at 0 is
  // sum_l (s!/l!) [t^s] phi^l x[j,l].
  Substitution sigma;
  for (VarId v : p.body().variables()) {
    if (!v.is_jet()) continue;
    const int s = v.order();
    Polynomial image;
    for (int l = 1; l <= s; ++l) {
      const Polynomial& c = powers[static_cast<std::size_t>(l)][static_cast<std::size_t>(s)];
      if (c.is_zero()) continue;
      const Rational scale = factorial(static_cast<unsigned>(s)) / factorial(static_cast<unsigned>(l));
      image += c * scale * Polynomial::variable(VarId::jet(v.component(), l));
    }
    sigma.emplace(v, std::move(image));
  }
  return JetPolynomial(substitute_partial(p.body(), sigma), p.config());
}

JetPolynomial total_derivative(const JetPolynomial& p) {
  Substitution rule;
  for (VarId v : p.body().variables()) {
    if (v.is_jet())
      rule.emplace(v, Polynomial::variable(VarId::jet(v.component(), v.order() + 1)));
    else
      rule.emplace(v, Polynomial());
  }
  return JetPolynomial(derive(p.body(), rule), JetConfig(p.config().k + 1, p.config().r));
}

JetPolynomial total_derivative(const JetPolynomial& p, int times) {
  JetPolynomial out = p;
  for (int i = 0; i < times; ++i) out = total_derivative(out);
  return out;
}

}  // namespace jetcalc
