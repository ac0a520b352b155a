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

#include "jetcalc/polynomial.hpp"

#include <algorithm>
#include <set>

#include "jetcalc/error.hpp"

namespace jetcalc {

// ---------------------------------------------------------------- VarId

VarId VarId::jet(int component, int order) {
  if (component < 1 || order < 1 || component >= (1 << 15) || order >= (1 << 15))
    throw Error(ErrorKind::bounds, "jet variable x[" + std::to_string(component) + "," +
                                       std::to_string(order) + "] out of range");
  return VarId(Kind::jet, static_cast<std::uint16_t>(component),
               static_cast<std::uint16_t>(order));
}

VarId VarId::param(int index) {
  if (index < 1 || index >= (1 << 15))
    throw Error(ErrorKind::bounds, "parameter a[" + std::to_string(index) + "] out of range");
  return VarId(Kind::param, static_cast<std::uint16_t>(index), 0);
}

std::string VarId::to_string() const {
  if (is_jet()) return "x[" + std::to_string(first_) + "," + std::to_string(second_) + "]";
  return "a[" + std::to_string(first_) + "]";
}

// ------------------------------------------------------------- Monomial

Monomial::Monomial(VarId var, unsigned exponent) {
  if (exponent > 0) {
    factors_.push_back({var, exponent});
    weight_ = var.weight() * static_cast<int>(exponent);
  }
}

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.var < b.var; });
  for (const Factor& f : factors) {
    if (f.exponent == 0) continue;
    if (!factors_.empty() && factors_.back().var == f.var)
      factors_.back().exponent += f.exponent;
    else
      factors_.push_back(f);
    weight_ += f.var.weight() * static_cast<int>(f.exponent);
  }
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (const Factor& f : factors_) d += f.exponent;
  return d;
}

unsigned Monomial::exponent(VarId var) const {
  for (const Factor& f : factors_)
    if (f.var == var) return f.exponent;
  return 0;
}

Monomial Monomial::without_one(VarId var) const {
  Monomial out = *this;
  for (auto it = out.factors_.begin(); it != out.factors_.end(); ++it) {
    if (it->var == var) {
      if (--it->exponent == 0) out.factors_.erase(it);
      out.weight_ -= var.weight();
      return out;
    }
  }
  throw Error(ErrorKind::invalid_argument, "variable " + var.to_string() + " not in monomial");
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->var < j->var) {
      out.factors_.push_back(*i++);
    } else if (j->var < i->var) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.push_back({i->var, i->exponent + j->exponent});
      ++i;
      ++j;
    }
  }
  out.factors_.insert(out.factors_.end(), i, a.factors_.end());
  out.factors_.insert(out.factors_.end(), j, b.factors_.end());
  out.weight_ = a.weight_ + b.weight_;
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.weight_ != b.weight_) return a.weight_ <=> b.weight_;
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  for (; i != a.factors_.end() && j != b.factors_.end(); ++i, ++j) {
    if (i->var != j->var)
      return i->var < j->var ? std::strong_ordering::greater : std::strong_ordering::less;
    if (i->exponent != j->exponent) return i->exponent <=> j->exponent;
  }
  if (i != a.factors_.end()) return std::strong_ordering::greater;
  if (j != b.factors_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const Factor& f : factors_) {
    h ^= (static_cast<std::size_t>(f.var.key()) << 8) ^ f.exponent;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// ---------------------------------------------------------- Polynomial

namespace {

void sort_desc(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
}

}  // namespace

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) terms_.push_back({Monomial(), c});
}

Polynomial::Polynomial(const Monomial& m, const Rational& c) {
  if (!c.is_zero()) terms_.push_back({m, c});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  PolynomialAccumulator acc;
  for (const Term& t : terms) acc.add(t.monomial, t.coeff);
  return acc.finish();
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return Rational(0);
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.monomial > key; });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return Rational(0);
}

std::optional<int> Polynomial::weight() const {
  if (terms_.empty()) return std::nullopt;
  const int w = terms_.front().monomial.weight();
  // Terms are sorted by weight first, so the extremes decide homogeneity.
  if (terms_.back().monomial.weight() != w) return std::nullopt;
  return w;
}

bool Polynomial::is_weighted_homogeneous() const {
  return terms_.empty() || weight().has_value();
}

std::vector<VarId> Polynomial::variables() const {
  std::set<VarId> vars;
  for (const Term& t : terms_)
    for (const Factor& f : t.monomial.factors()) vars.insert(f.var);
  return {vars.begin(), vars.end()};
}

bool Polynomial::has_params() const {
  for (const Term& t : terms_)
    for (const Factor& f : t.monomial.factors())
      if (f.var.is_param()) return true;
  return false;
}

int Polynomial::max_jet_order() const {
  int best = 0;
  for (const Term& t : terms_)
    for (const Factor& f : t.monomial.factors())
      if (f.var.is_jet()) best = std::max(best, f.var.order());
  return best;
}

int Polynomial::max_component() const {
  int best = 0;
  for (const Term& t : terms_)
    for (const Factor& f : t.monomial.factors())
      if (f.var.is_jet()) best = std::max(best, f.var.component());
  return best;
}

Rational Polynomial::content() const {
  if (terms_.empty()) return Rational(0);
  Integer g = 0;
  Integer l = 1;
  for (const Term& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.numerator().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.denominator().get_mpz_t());
  }
  return Rational(g, l);
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (Term& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() && j != o.terms_.end()) {
    const auto c = i->monomial <=> j->monomial;
    if (c > 0) {
      merged.push_back(std::move(*i++));
    } else if (c < 0) {
      merged.push_back(*j++);
    } else {
      Rational s = i->coeff + j->coeff;
      if (!s.is_zero()) merged.push_back({std::move(i->monomial), std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i != terms_.end(); ++i) merged.push_back(std::move(*i));
  for (; j != o.terms_.end(); ++j) merged.push_back(*j);
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  if (a.size() == 1 && a.terms_[0].monomial.is_one()) return b * a.terms_[0].coeff;
  if (b.size() == 1 && b.terms_[0].monomial.is_one()) return a * b.terms_[0].coeff;
  PolynomialAccumulator acc;
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& large = a.size() <= b.size() ? b : a;
  for (const Term& t : small.terms_) acc.add_shifted(large, t.monomial, t.coeff);
  return acc.finish();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  }
  return true;
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result(1);
  Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

// --------------------------------------------------------- Accumulator

void PolynomialAccumulator::add(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void PolynomialAccumulator::add(const Polynomial& p, const Rational& scale) {
  if (scale.is_zero()) return;
  for (const Term& t : p.terms()) add(t.monomial, scale.is_one() ? t.coeff : t.coeff * scale);
}

void PolynomialAccumulator::add_shifted(const Polynomial& p, const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  for (const Term& t : p.terms()) add(t.monomial * m, t.coeff * c);
}

Polynomial PolynomialAccumulator::finish() {
  Polynomial out;
  out.terms_.reserve(acc_.size());
  for (auto& [m, c] : acc_)
    if (!c.is_zero()) out.terms_.push_back({m, std::move(c)});
  acc_.clear();
  sort_desc(out.terms_);
  return out;
}

// -------------------------------------------- substitution / derivation

namespace {

Polynomial substitute_impl(const Polynomial& p, const Substitution& sigma, bool strict) {
  // Powers of each image are reused across terms.
  std::map<VarId, std::vector<Polynomial>> powers;
  auto power_of = [&](VarId var, unsigned e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) {
      auto it = sigma.find(var);
      cache.push_back(Polynomial(1));
      cache.push_back(it != sigma.end() ? it->second : Polynomial::variable(var));
    }
    while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
    return cache[e];
  };

  PolynomialAccumulator acc;
  for (const Term& t : p.terms()) {
    Polynomial image(t.coeff);
    Monomial kept;
    for (const Factor& f : t.monomial.factors()) {
      if (!sigma.contains(f.var)) {
        if (strict)
          throw Error(ErrorKind::missing_variable,
                      "substitution does not map variable " + f.var.to_string());
        kept = kept * Monomial(f.var, f.exponent);
        continue;
      }
      image = image * power_of(f.var, f.exponent);
      if (image.is_zero()) break;
    }
    acc.add_shifted(image, kept, Rational(1));
  }
  return acc.finish();
}

Polynomial derive_impl(const Polynomial& p, const Substitution& rule, bool strict) {
  PolynomialAccumulator acc;
  for (const Term& t : p.terms()) {
    for (const Factor& f : t.monomial.factors()) {
      auto it = rule.find(f.var);
      if (it == rule.end()) {
        if (strict)
          throw Error(ErrorKind::missing_variable,
                      "derivation rule does not cover variable " + f.var.to_string());
        continue;
      }
      acc.add_shifted(it->second, t.monomial.without_one(f.var),
                      t.coeff * Rational(static_cast<long>(f.exponent)));
    }
  }
  return acc.finish();
}

}  // namespace

Polynomial substitute(const Polynomial& p, const Substitution& sigma) {
  return substitute_impl(p, sigma, true);
}

Polynomial substitute_partial(const Polynomial& p, const Substitution& sigma) {
  return substitute_impl(p, sigma, false);
}

Polynomial derive(const Polynomial& p, const Substitution& rule) {
  return derive_impl(p, rule, true);
}

Polynomial derive_partial(const Polynomial& p, const Substitution& rule) {
  return derive_impl(p, rule, false);
}

Polynomial partial_derivative(const Polynomial& p, VarId var) {
  return derive_impl(p, Substitution{{var, Polynomial(1)}}, false);
}

}  // namespace jetcalc
