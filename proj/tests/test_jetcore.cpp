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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jetcalc/error.hpp"
#include "jetcalc/format.hpp"
#include "jetcalc/jet.hpp"
#include "support.hpp"

using namespace jetcalc;

namespace {

Polynomial P(const char* text) { return parse_polynomial(text); }
Polynomial x(int j, int s) { return Polynomial::variable(VarId::jet(j, s)); }
Polynomial a(int i) { return Polynomial::variable(VarId::param(i)); }

Reparametrization series(std::vector<int> c) {
  std::vector<Rational> q(c.begin(), c.end());
  return Reparametrization::concrete(q);
}

// Coefficient of t^n in phi^l, computed by naive repeated multiplication of
// coefficient lists. Independent of the library's composition code.
Polynomial power_coefficient(const std::vector<Polynomial>& phi, int l, int n) {
  std::vector<Polynomial> acc(static_cast<std::size_t>(n + 1));
  acc[0] = Polynomial(1);
  for (int step = 0; step < l; ++step) {
    std::vector<Polynomial> next(acc.size());
    for (int i = 0; i <= n; ++i)
      for (int j = 1; i + j <= n && j <= static_cast<int>(phi.size()); ++j)
        next[static_cast<std::size_t>(i + j)] += acc[static_cast<std::size_t>(i)] * phi[static_cast<std::size_t>(j - 1)];
    acc = std::move(next);
  }
  return acc[static_cast<std::size_t>(n)];
}

}  // namespace

TEST_CASE("jet config") {
  const JetConfig c(2, 3);
  CHECK(c.fiber_dimension() == 6);
  CHECK(c.variables().size() == 6);
  CHECK(c.variables().front() == VarId::jet(1, 1));
  CHECK(c.variables()[1] == VarId::jet(1, 2));
  CHECK_THROWS_AS(JetConfig(0, 1), Error);
  CHECK_THROWS_AS(JetPolynomial(x(1, 3), JetConfig(2, 1)), Error);
  CHECK(JetPolynomial::infer(P("x[2,3]*x[1,1]")).config() == JetConfig(3, 2));
}

TEST_CASE("faa di bruno examples") {
  const FaaDiBrunoMatrix m3 = faa_di_bruno(3);
  CHECK(m3.at(1, 3) == a(3));
  CHECK(m3.at(2, 3) == Rational(2) * a(1) * a(2));
  CHECK(m3.at(3, 3) == pow(a(1), 3));
  CHECK(faa_di_bruno(4).at(3, 4) == Rational(3) * pow(a(1), 2) * a(2));
  // a_1 = 1, a_i = 0 gives the identity.
  const FaaDiBrunoMatrix id = faa_di_bruno(Reparametrization::identity(5));
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) CHECK(id.at(i, j) == Polynomial(i == j ? 1 : 0));
}

TEST_CASE("faa di bruno entries match powers of the series") {
  for (int k = 1; k <= 6; ++k) {
    const FaaDiBrunoMatrix m = faa_di_bruno(k);
    const auto phi = Reparametrization::formal(k).coefficients();
    for (int s = 1; s <= k; ++s)
      for (int j = 1; j <= k; ++j) CHECK(m.at(s, j) == power_coefficient(phi, s, j));
  }
}

TEST_CASE("compose and invert examples") {
  const Reparametrization t = Reparametrization::identity(3);
  const Reparametrization f = series({1, 1, 0});
  CHECK(compose(t, f) == f);
  CHECK(compose(f, t) == f);
  CHECK(compose(f, f) == series({1, 2, 2}));
  CHECK(invert(f) == series({1, -1, 2}));
  CHECK(invert(t) == t);
  CHECK(compose(f, invert(f)) == t);
  const Reparametrization g = series({3, -1, 5});
  CHECK(compose(g, f).coefficient(1) == Polynomial(3));
  CHECK_THROWS_AS(compose(f, Reparametrization::identity(2)), Error);
  try {
    (void)series({0, 1});
    FAIL("expected non-invertible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::non_invertible);
  }
}

TEST_CASE("compose agrees with naive series substitution") {
  testing::Rng rng(201);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = testing::uniform(rng, 1, 5);
    const Reparametrization f = testing::random_reparametrization(rng, k);
    const Reparametrization g = testing::random_reparametrization(rng, k);
    const Reparametrization fg = compose(f, g);
    for (int n = 1; n <= k; ++n) {
      Polynomial expected;
      for (int l = 1; l <= n; ++l) expected += f.coefficient(l) * power_coefficient(g.coefficients(), l, n);
      CHECK(fg.coefficient(n) == expected);
    }
  }
}

TEST_CASE("pullback examples") {
  const Reparametrization phi = Reparametrization::formal(3);
  for (int j = 1; j <= 2; ++j) {
    const JetConfig c(3, 2);
    CHECK(pullback(JetPolynomial(x(j, 1), c), phi).body() == a(1) * x(j, 1));
    CHECK(pullback(JetPolynomial(x(j, 2), c), phi).body() == Rational(2) * a(2) * x(j, 1) + pow(a(1), 2) * x(j, 2));
    CHECK(pullback(JetPolynomial(x(j, 3), c), phi).body() ==
          Rational(6) * a(3) * x(j, 1) + Rational(6) * a(1) * a(2) * x(j, 2) + pow(a(1), 3) * x(j, 3));
  }
  try {
    (void)pullback(JetPolynomial::infer(x(1, 3)), Reparametrization::formal(2));
    FAIL("expected order overflow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::order_overflow);
  }
}

TEST_CASE("pullback of a concrete curve") {
  // f(t) = t + t^3 / 3, phi(t) = 2t + t^2: f(phi(t)) has derivatives at 0
  // computed by hand from 2t + t^2 + (8t^3 + 12t^4 + ...)/3.
  const Polynomial p = x(1, 1) + x(1, 3);
  const Polynomial pulled = pullback(JetPolynomial(p, JetConfig(3, 1)), series({2, 1, 0})).body();
  // Evaluate at f'(0) = 1, f''(0) = 0, f'''(0) = 2.
  const Substitution jet_of_f{{VarId::jet(1, 1), Polynomial(1)}, {VarId::jet(1, 2), Polynomial(0)}, {VarId::jet(1, 3), Polynomial(2)}};
  // (f o phi)'(0) = 2, (f o phi)'''(0) = 3! * 8/3 = 16.
  CHECK(substitute(pulled, jet_of_f) == Polynomial(18));
}

TEST_CASE("identity pullback and contravariance") {
  testing::Rng rng(202);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = testing::uniform(rng, 1, 4);
    const JetConfig c(k, testing::uniform(rng, 1, 3));
    const JetPolynomial p(testing::random_polynomial(rng, c, 4, 3), c);
    CHECK(pullback(p, Reparametrization::identity(k)) == p);
    const Reparametrization f = testing::random_reparametrization(rng, k);
    const Reparametrization g = testing::random_reparametrization(rng, k);
    CHECK(pullback(pullback(p, f), g) == pullback(p, compose(g, f)));
  }
}

TEST_CASE("group law for formal matrices") {
  for (int k = 1; k <= 4; ++k) {
    std::vector<Polynomial> second;
    for (int i = 1; i <= k; ++i) second.push_back(a(k + i));
    const Reparametrization phi = Reparametrization::formal(k);
    const Reparametrization psi = Reparametrization::from_coefficients(second);
    CHECK(faa_di_bruno(compose(phi, psi)) == faa_di_bruno(phi) * faa_di_bruno(psi));
  }
}

TEST_CASE("matrix and series agree on divided jets") {
  for (int k = 1; k <= 5; ++k) {
    const FaaDiBrunoMatrix m = faa_di_bruno(k);
    for (int s = 1; s <= k; ++s) {
      Polynomial image;
      for (int l = 1; l <= s; ++l) image += m.at(l, s) * x(1, l) * (Rational(1) / factorial(l));
      image *= factorial(s);
      CHECK(pullback(JetPolynomial(x(1, s), JetConfig(k, 1)), Reparametrization::formal(k)).body() == image);
    }
  }
}

TEST_CASE("pullback grading") {
  // Each term of pullback(P) for P of weight w carries parameter weight w
  // (a_i weighted i), and jet weight plus (parameter weight minus degree) w.
  testing::Rng rng(203);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = testing::uniform(rng, 1, 4);
    const JetConfig c(k, 2);
    const int w = testing::uniform(rng, 1, 6);
    const Polynomial p = testing::random_homogeneous(rng, c, w);
    if (p.is_zero()) continue;
    const Polynomial q = pullback(JetPolynomial(p, c), Reparametrization::formal(k)).body();
    for (const Term& t : q.terms()) {
      int param_weight = 0;
      int param_degree = 0;
      int jet_weight = 0;
      for (const Factor& f : t.monomial.factors()) {
        if (f.var.is_jet()) {
          jet_weight += f.var.weight() * static_cast<int>(f.exponent);
        } else {
          param_weight += f.var.weight() * static_cast<int>(f.exponent);
          param_degree += static_cast<int>(f.exponent);
        }
      }
      CHECK(param_weight == w);
      CHECK(jet_weight + param_weight - param_degree == w);
    }
  }
}

TEST_CASE("total derivative examples") {
  CHECK(total_derivative(JetPolynomial::infer(x(1, 1))).body() == x(1, 2));
  CHECK(total_derivative(JetPolynomial::infer(x(1, 1) * x(2, 1))).body() == x(1, 2) * x(2, 1) + x(1, 1) * x(2, 2));
  const JetPolynomial w = JetPolynomial::infer(P("x[1,1]*x[2,2]-x[2,1]*x[1,2]"));
  const JetPolynomial dw = total_derivative(w);
  CHECK(dw.body() == P("x[1,1]*x[2,3]-x[2,1]*x[1,3]"));
  CHECK(dw.config() == JetConfig(3, 2));
  CHECK(total_derivative(JetPolynomial::infer(Polynomial(5))).is_zero());
  CHECK(total_derivative(w, 0) == w);
  CHECK(total_derivative(w, 2) == total_derivative(dw));
}

TEST_CASE("total derivative raises weight and is Leibniz") {
  testing::Rng rng(204);
  for (int trial = 0; trial < 100; ++trial) {
    const JetConfig c(3, 2);
    const int w = testing::uniform(rng, 1, 6);
    const Polynomial p = testing::random_homogeneous(rng, c, w);
    const Polynomial q = testing::random_polynomial(rng, c, 3, 3);
    const Polynomial dp = total_derivative(JetPolynomial(p, c)).body();
    if (!dp.is_zero()) CHECK(dp.weight() == w + 1);
    const Polynomial lhs = total_derivative(JetPolynomial(p * q, c)).body();
    CHECK(lhs == dp * q + p * total_derivative(JetPolynomial(q, c)).body());
  }
}
