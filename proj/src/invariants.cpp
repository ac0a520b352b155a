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

#include "jetcalc/invariants.hpp"

#include "jetcalc/error.hpp"
#include "jetcalc/format.hpp"
#include "jetcalc/linalg.hpp"

namespace jetcalc {

std::string_view group_name(Group g) { return g == Group::full ? "Gk" : "Uk"; }

Group parse_group(std::string_view name) {
  if (name == "Gk") return Group::full;
  if (name == "Uk") return Group::unipotent;
  throw Error(ErrorKind::invalid_argument, "unknown group '" + std::string(name) + "'");
}

BracketConvention parse_convention(std::string_view name) {
  if (name == "normalized") return BracketConvention::normalized;
  if (name == "merker") return BracketConvention::merker;
  throw Error(ErrorKind::invalid_argument, "unknown bracket convention '" + std::string(name) + "'");
}

nlohmann::json InvarianceReport::to_json() const {
  switch (status) {
    case Status::relative_invariant:
      return {{"status", "relative_invariant"}, {"weight", *weight}};
    case Status::not_invariant:
      return {{"status", "not_invariant"}, {"witness", to_string(witness)}};
    case Status::unipotent_invariant_only:
      break;
  }
  return {{"status", "unipotent_invariant_only"}};
}

std::string InvarianceReport::to_text() const {
  std::string out;
  switch (status) {
    case Status::relative_invariant:
      out = "relative_invariant weight " + std::to_string(*weight);
      break;
    case Status::not_invariant:
      out = "not_invariant witness " + to_string(witness);
      break;
    case Status::unipotent_invariant_only:
      out = "unipotent_invariant_only";
      break;
  }
  if (restricted) out += " (non-homogeneous input: checked under Uk only)";
  return out;
}

RationalFunction PicardOperator::apply(const JetPolynomial& y) const {
  RationalFunction total(total_derivative(y, order).body());
  for (int t = 1; t <= order; ++t) {
    const JetPolynomial dy = total_derivative(y, order - t);
    total = total + coefficients[static_cast<std::size_t>(t - 1)] * RationalFunction(dy.body());
  }
  return total;
}

JetPolynomial DerivationRule::apply(const JetPolynomial& p) const {
  return JetPolynomial(derive(p.body(), rule), p.config());
}

// -------------------------------------------------------------- Wronskian

JetPolynomial wronskian(const std::vector<JetPolynomial>& args) {
  if (args.empty()) throw Error(ErrorKind::invalid_argument, "wronskian of an empty list");
  const std::size_t n = args.size();
  JetConfig config = args.front().config();
  std::vector<std::vector<Polynomial>> rows(n, std::vector<Polynomial>(n));
  for (std::size_t j = 0; j < n; ++j) {
    config = join(config, args[j].config());
    JetPolynomial d = args[j];
    for (std::size_t i = 0; i < n; ++i) {
      rows[i][j] = d.body();
      if (i + 1 < n) d = total_derivative(d);
    }
  }
  config.k += static_cast<int>(n) - 1;
  return JetPolynomial(determinant(rows), config);
}

bool wronskian_dependence_test(const std::vector<JetPolynomial>& args) {
  return wronskian(args).is_zero();
}

// ---------------------------------------------------------------- bracket

JetPolynomial bracket(const JetPolynomial& p, const JetPolynomial& q, BracketConvention convention) {
  JetConfig config = join(p.config(), q.config());
  config.k += 1;
  if (p.is_zero() || q.is_zero()) return JetPolynomial(Polynomial(), config);
  const auto wp = p.weight();
  const auto wq = q.weight();
  if (!wp || !wq) throw Error(ErrorKind::non_homogeneous, "bracket needs weighted-homogeneous inputs");
  const Polynomial dp = total_derivative(p).body();
  const Polynomial dq = total_derivative(q).body();
  Polynomial result;
  if (convention == BracketConvention::normalized) {
    if (*wp == 0 || *wq == 0)
      throw Error(ErrorKind::zero_degree, "normalized bracket needs nonzero weights");
    result = q.body() * dp * (Rational(1) / Rational(*wp)) -
             p.body() * dq * (Rational(1) / Rational(*wq));
  } else {
    result = q.body() * dp * Rational(*wq) - p.body() * dq * Rational(*wp);
  }
  return JetPolynomial(std::move(result), config);
}

std::vector<JetPolynomial> q_sequence(const JetConfig& config, int level,
                                      BracketConvention convention) {
  if (config.r < 2) throw Error(ErrorKind::rank, "q_sequence needs r >= 2");
  if (level < 2) throw Error(ErrorKind::invalid_argument, "q_sequence level must be >= 2");
  const JetConfig first_order(1, config.r);
  std::vector<JetPolynomial> firsts;
  for (int i = 1; i <= config.r; ++i)
    firsts.emplace_back(Polynomial::variable(VarId::jet(i, 1)), first_order);

  std::vector<JetPolynomial> current;
  for (int i = 0; i < config.r; ++i)
    for (int j = i + 1; j < config.r; ++j) {
      JetPolynomial b = bracket(firsts[static_cast<std::size_t>(i)],
                                firsts[static_cast<std::size_t>(j)], convention);
      if (!b.is_zero()) current.push_back(std::move(b));
    }
  for (int l = 3; l <= level; ++l) {
    std::vector<JetPolynomial> next;
    for (const JetPolynomial& q : current)
      for (const JetPolynomial& f : firsts) {
        JetPolynomial b = bracket(f, q, convention);
        if (!b.is_zero()) next.push_back(std::move(b));
      }
    current = std::move(next);
  }
  return current;
}

// ----------------------------------------------------------- certification

namespace {

InvarianceReport unipotent_verdict(const JetPolynomial& p) {
  InvarianceReport report;
  report.group = Group::unipotent;
  const Polynomial defect =
      pullback(p, Reparametrization::formal_unipotent(p.config().k)).body() - p.body();
  if (defect.is_zero()) {
    report.status = InvarianceReport::Status::unipotent_invariant_only;
  } else {
    report.status = InvarianceReport::Status::not_invariant;
    report.witness = Polynomial(defect.leading_term().monomial, defect.leading_term().coeff);
  }
  return report;
}

}  // namespace

InvarianceReport check_invariance(const JetPolynomial& p, Group group) {
  if (p.body().has_params())
    throw Error(ErrorKind::invalid_argument, "check_invariance needs a polynomial in jet variables only");
  if (group == Group::unipotent) return unipotent_verdict(p);

  const auto w = p.weight();
  if (!w) {
    InvarianceReport report = unipotent_verdict(p);
    report.group = Group::full;
    report.restricted = true;
    return report;
  }
  InvarianceReport report;
  report.group = Group::full;
  const Polynomial scaled = pow(Polynomial::variable(VarId::param(1)), static_cast<unsigned>(*w)) * p.body();
  const Polynomial defect = pullback(p, Reparametrization::formal(p.config().k)).body() - scaled;
  if (defect.is_zero()) {
    report.status = InvarianceReport::Status::relative_invariant;
    report.weight = *w;
  } else {
    report.status = InvarianceReport::Status::not_invariant;
    report.witness = Polynomial(defect.leading_term().monomial, defect.leading_term().coeff);
  }
  return report;
}

std::vector<DerivationRule> infinitesimal_generators(const JetConfig& config) {
  if (config.k < 2) throw Error(ErrorKind::invalid_argument, "infinitesimal generators need k >= 2");
  std::vector<DerivationRule> out;
  for (int j = 2; j <= config.k; ++j) {
    // d/de pullback(., t + e t^j) at e = 0, with e realized as a[j].
    const VarId eps = VarId::param(j);
    std::vector<Polynomial> coeffs(static_cast<std::size_t>(config.k));
    coeffs[0] = Polynomial(1);
    coeffs[static_cast<std::size_t>(j - 1)] = Polynomial::variable(eps);
    const Reparametrization curve = Reparametrization::from_coefficients(std::move(coeffs));
    DerivationRule rule;
    rule.index = j;
    for (VarId v : config.variables()) {
      const Polynomial moved = pullback(JetPolynomial(Polynomial::variable(v), config), curve).body();
      rule.rule.emplace(v, substitute_partial(partial_derivative(moved, eps), {{eps, Polynomial()}}));
    }
    out.push_back(std::move(rule));
  }
  return out;
}

CoordinateChangeResult coordinate_change(const JetConfig& config, int component, int order) {
  if (component < 2 || component > config.r)
    throw Error(ErrorKind::bounds, "coordinate_change: component must lie in 2..r");
  if (order < 1 || order > config.k)
    throw Error(ErrorKind::bounds, "coordinate_change: order must lie in 1..k");
  // g = N / u^e with u = x[1,1]; d/dt' = (1/u) d/dt gives
  // g' = (D(N) u - e N D(u)) / u^(e+2).
  const Polynomial u = Polynomial::variable(VarId::jet(1, 1));
  const Polynomial du = Polynomial::variable(VarId::jet(1, 2));
  Polynomial numerator = Polynomial::variable(VarId::jet(component, 1));
  int exponent = 1;
  for (int s = 2; s <= order; ++s) {
    const Polynomial dn = total_derivative(JetPolynomial::infer(numerator)).body();
    numerator = dn * u - numerator * du * Rational(exponent);
    exponent += 2;
  }
  return {component, order, JetPolynomial(std::move(numerator), config), exponent};
}

PicardOperator picard_operator(const std::vector<JetPolynomial>& solutions) {
  if (solutions.empty()) throw Error(ErrorKind::invalid_argument, "picard_operator needs solutions");
  const std::size_t n = solutions.size();
  // Rows 0..n of successive derivatives; the minor without row i is the
  // cofactor of y^(i) when y is appended as the last column.
  std::vector<std::vector<Polynomial>> rows(n + 1, std::vector<Polynomial>(n));
  for (std::size_t c = 0; c < n; ++c) {
    JetPolynomial d = solutions[c];
    for (std::size_t i = 0; i <= n; ++i) {
      rows[i][c] = d.body();
      if (i < n) d = total_derivative(d);
    }
  }
  auto minor_without = [&](std::size_t skip) {
    std::vector<std::vector<Polynomial>> m;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip) m.push_back(rows[i]);
    return determinant(m);
  };
  const Polynomial w = minor_without(n);
  if (w.is_zero())
    throw Error(ErrorKind::dependent_solutions, "solutions have vanishing Wronskian");

  // W(u_1..u_n, y) = sum_i (-1)^(i+n) M_i y^(i) with M_n = W; divide by W.
  PicardOperator op;
  op.order = static_cast<int>(n);
  op.coefficients.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial m = minor_without(i);
    if ((i + n) % 2 == 1) m = -m;
    op.coefficients[n - i - 1] = RationalFunction(std::move(m), w);
  }
  for (const JetPolynomial& u : solutions) {
    if (!op.apply(u).is_zero())
      throw Error(ErrorKind::invalid_argument, "internal: Picard operator fails on a solution");
  }
  return op;
}

}  // namespace jetcalc
