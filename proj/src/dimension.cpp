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

#include "jetcalc/dimension.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <cstdint>
#include <numeric>

#include "jetcalc/error.hpp"
#include "jetcalc/format.hpp"
#include "jetcalc/linalg.hpp"

namespace jetcalc {

namespace {

nlohmann::json integer_json(const Integer& v) {
  if (v.fits_ulong_p()) return v.get_ui();
  return v.get_str();
}

std::string shape_text(std::size_t rows, std::size_t cols) {
  return std::to_string(rows) + "x" + std::to_string(cols);
}

// Column coordinates of polynomials over a fixed monomial list.
class MonomialIndex {
 public:
  explicit MonomialIndex(const std::vector<Monomial>& monomials) {
    for (std::size_t i = 0; i < monomials.size(); ++i) index_.emplace(monomials[i], i);
  }
  std::size_t size() const { return index_.size(); }

  Vector coordinates(const Polynomial& p) const {
    Vector v(index_.size());
    for (const Term& t : p.terms()) {
      auto it = index_.find(t.monomial);
      if (it == index_.end())
        throw Error(ErrorKind::invalid_argument, "polynomial leaves the monomial basis");
      v[it->second] = t.coeff;
    }
    return v;
  }

 private:
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

Polynomial combine(const std::vector<Monomial>& monomials, const Vector& v) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) terms.push_back({monomials[i], v[i]});
  return Polynomial::from_terms(std::move(terms));
}

// Builds the matrix whose column i holds the coordinates of images[i]; rows
// are indexed by whatever (tag, monomial) pairs occur.
Matrix image_matrix(const std::vector<std::vector<std::pair<int, Polynomial>>>& images) {
  std::map<std::pair<int, Monomial>, std::size_t> row_of;
  for (const auto& column : images)
    for (const auto& [tag, poly] : column)
      for (const Term& t : poly.terms()) row_of.try_emplace({tag, t.monomial}, 0);
  std::size_t next = 0;
  for (auto& [key, row] : row_of) row = next++;
  Matrix m(row_of.size(), images.size());
  for (std::size_t c = 0; c < images.size(); ++c)
    for (const auto& [tag, poly] : images[c])
      for (const Term& t : poly.terms()) m.at(row_of.at({tag, t.monomial}), c) += t.coeff;
  return m;
}

InvariantBasis basis_from_kernel(const JetConfig& config, int m,
                                 const std::vector<Monomial>& monomials, const Matrix& system) {
  InvariantBasis out;
  out.config = config;
  out.weight = m;
  out.group = Group::unipotent;
  if (monomials.empty()) return out;
  if (system.rows() == 0) {
    for (const Monomial& mono : monomials) out.basis.emplace_back(Polynomial(mono), config);
    return out;
  }
  for (const Vector& v : nullspace(system))
    out.basis.emplace_back(combine(monomials, v), config);
  return out;
}

}  // namespace

// ----------------------------------------------------------------- Hilbert

nlohmann::json HilbertTable::to_json() const {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Integer& c : coefficients) coeffs.push_back(integer_json(c));
  return {{"k", config.k}, {"r", config.r}, {"m_max", m_max}, {"coefficients", coeffs}};
}

HilbertTable hilbert_gg(const JetConfig& config, int m_max) {
  if (m_max < 0) throw Error(ErrorKind::invalid_argument, "m_max must be >= 0");
  std::vector<Integer> c(static_cast<std::size_t>(m_max) + 1, Integer(0));
  c[0] = 1;
  // Multiply by 1/(1 - q^s), r times for each s: in place prefix sums with stride s.
  for (int s = 1; s <= config.k; ++s)
    for (int rep = 0; rep < config.r; ++rep)
      for (int m = s; m <= m_max; ++m)
        c[static_cast<std::size_t>(m)] += c[static_cast<std::size_t>(m - s)];
  return {config, m_max, std::move(c)};
}

std::vector<Monomial> enumerate_monomials(const JetConfig& config, int m) {
  if (m < 0) throw Error(ErrorKind::invalid_argument, "weight must be >= 0");
  const std::vector<VarId> vars = config.variables();
  std::vector<Monomial> out;
  std::vector<Factor> factors;
  std::function<void(std::size_t, int)> walk = [&](std::size_t i, int remaining) {
    if (remaining == 0) {
      out.emplace_back(factors);
      return;
    }
    if (i == vars.size()) return;
    const int w = vars[i].weight();
    for (int e = remaining / w; e >= 1; --e) {
      factors.push_back({vars[i], static_cast<unsigned>(e)});
      walk(i + 1, remaining - e * w);
      factors.pop_back();
    }
    walk(i + 1, remaining);
  };
  walk(0, m);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return a > b; });
  return out;
}

// ------------------------------------------------------- invariant fibers

nlohmann::json InvariantBasis::to_json() const {
  nlohmann::json elems = nlohmann::json::array();
  for (const JetPolynomial& p : basis) elems.push_back(jetcalc::to_json(p.body()));
  return {{"k", config.k},
          {"r", config.r},
          {"m", weight},
          {"group", std::string(group_name(group))},
          {"dimension", basis.size()},
          {"basis", elems}};
}

InvariantBasis InvariantBasis::from_json(const nlohmann::json& j) {
  try {
    InvariantBasis out;
    out.config = JetConfig(j.at("k").get<int>(), j.at("r").get<int>());
    out.weight = j.at("m").get<int>();
    out.group = parse_group(j.at("group").get<std::string>());
    for (const auto& p : j.at("basis")) out.basis.emplace_back(polynomial_from_json(p), out.config);
    if (out.basis.size() != j.at("dimension").get<std::size_t>())
      throw Error(ErrorKind::parse, "invariant basis dimension mismatch");
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("malformed invariant basis JSON: ") + e.what());
  }
}

InvariantBasis invariant_basis(const JetConfig& config, int m, std::size_t size_limit,
                               MatrixShape* shape) {
  if (m < 0) throw Error(ErrorKind::invalid_argument, "weight must be >= 0");
  const HilbertTable table = hilbert_gg(config, m);
  const Integer& count = table.coefficients.back();
  const std::size_t cols = count.fits_ulong_p() ? count.get_ui() : SIZE_MAX;
  if (cols > size_limit) {
    std::size_t rows = 0;
    for (int j = 2; j <= config.k; ++j)
      if (m - j + 1 >= 0) rows += table.coefficients[static_cast<std::size_t>(m - j + 1)].get_ui();
    throw Error(ErrorKind::instance_too_large,
                "invariant basis system " + shape_text(rows, cols) + " exceeds the limit of " +
                    std::to_string(size_limit) + " columns");
  }
  const std::vector<Monomial> monomials = enumerate_monomials(config, m);
  Matrix system;
  if (config.k >= 2) {
    const std::vector<DerivationRule> generators = infinitesimal_generators(config);
    std::vector<std::vector<std::pair<int, Polynomial>>> images(monomials.size());
    for (std::size_t c = 0; c < monomials.size(); ++c) {
      const JetPolynomial p(Polynomial(monomials[c]), config);
      for (const DerivationRule& g : generators) images[c].emplace_back(g.index, g.apply(p).body());
    }
    system = image_matrix(images);
  }
  if (shape != nullptr) *shape = {system.rows(), monomials.size()};
  return basis_from_kernel(config, m, monomials, system);
}

InvariantBasis invariant_basis_by_pullback(const JetConfig& config, int m, std::size_t size_limit) {
  if (m < 0) throw Error(ErrorKind::invalid_argument, "weight must be >= 0");
  const std::vector<Monomial> monomials = enumerate_monomials(config, m);
  if (monomials.size() > size_limit)
    throw Error(ErrorKind::instance_too_large,
                "pullback system with " + std::to_string(monomials.size()) +
                    " columns exceeds the limit of " + std::to_string(size_limit));
  const Reparametrization phi = Reparametrization::formal_unipotent(config.k);
  std::vector<std::vector<std::pair<int, Polynomial>>> images(monomials.size());
  for (std::size_t c = 0; c < monomials.size(); ++c) {
    const JetPolynomial p(Polynomial(monomials[c]), config);
    images[c].emplace_back(0, pullback(p, phi).body() - p.body());
  }
  return basis_from_kernel(config, m, monomials, image_matrix(images));
}

// -------------------------------------------------------------- generation

nlohmann::json GenerationReport::to_json() const {
  nlohmann::json cogens = nlohmann::json::array();
  for (const JetPolynomial& p : cogenerators) cogens.push_back(to_string(p.body()));
  return {{"spanned_dim", spanned_dim},
          {"invariant_dim", invariant_dim},
          {"product_span_dim", product_span_dim},
          {"depth", depth},
          {"cogenerators", cogens}};
}

GenerationReport generation_check(const JetConfig& config, int m,
                                  const std::vector<JetPolynomial>& generators, int depth,
                                  std::size_t size_limit) {
  if (depth < 0) depth = config.k - 1;
  for (const JetPolynomial& g : generators) {
    const InvarianceReport cert = check_invariance(g, Group::full);
    if (cert.status != InvarianceReport::Status::relative_invariant)
      throw Error(ErrorKind::invalid_argument,
                  "generator " + to_string(g.body()) + " is not a relative invariant");
  }
  const InvariantBasis invariants = invariant_basis(config, m, size_limit);

  // Pool: generators and their derivatives that still live in the k-jet fiber.
  std::vector<Polynomial> pool;
  std::vector<int> pool_weight;
  for (const JetPolynomial& g : generators) {
    JetPolynomial d = g;
    for (int level = 0; level <= depth; ++level) {
      if (level > 0) d = total_derivative(d);
      if (d.is_zero() || d.body().max_jet_order() > config.k || d.body().max_component() > config.r)
        break;
      const int w = *d.weight();
      if (w == 0 || w > m) break;
      pool.push_back(d.body());
      pool_weight.push_back(w);
    }
  }

  const std::vector<Monomial> monomials = enumerate_monomials(config, m);
  const MonomialIndex index(monomials);
  Matrix span(0, monomials.size());
  std::function<void(std::size_t, int, const Polynomial&)> walk =
      [&](std::size_t start, int remaining, const Polynomial& product) {
        if (remaining == 0) {
          span.push_row(index.coordinates(product));
          return;
        }
        for (std::size_t i = start; i < pool.size(); ++i)
          if (pool_weight[i] <= remaining) walk(i, remaining - pool_weight[i], product * pool[i]);
      };
  if (m == 0) span.push_row(index.coordinates(Polynomial(1)));
  else walk(0, m, Polynomial(1));

  GenerationReport report;
  report.depth = depth;
  report.invariant_dim = static_cast<int>(invariants.dimension());
  std::vector<std::size_t> pivots;
  {
    Matrix reduced = span;
    pivots = row_reduce(reduced);
    report.product_span_dim = static_cast<int>(pivots.size());
    // Keep only the independent rows to make the incremental ranks cheap.
    Matrix compact(0, monomials.size());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      Vector row(monomials.size());
      for (std::size_t j = 0; j < monomials.size(); ++j) row[j] = reduced.at(i, j);
      compact.push_row(row);
    }
    span = std::move(compact);
  }
  std::size_t current_rank = pivots.size();
  for (const JetPolynomial& b : invariants.basis) {
    Matrix trial = span;
    trial.push_row(index.coordinates(b.body()));
    if (rank(trial) > current_rank) {
      span = std::move(trial);
      ++current_rank;
      report.cogenerators.push_back(b);
    }
  }
  // dim(S + I) = current_rank, so dim(S n I) = dim S + dim I - dim(S + I).
  report.spanned_dim = report.product_span_dim + report.invariant_dim - static_cast<int>(current_rank);
  return report;
}

// ------------------------------------------------------------------ growth

nlohmann::json GrowthReport::to_json() const {
  nlohmann::json classes_json = nlohmann::json::array();
  for (const ResidueClassGrowth& c : classes)
    classes_json.push_back({{"residue", c.residue},
                            {"samples", c.samples},
                            {"degree", c.degree},
                            {"leading_difference", integer_json(c.leading_difference)},
                            {"ok", c.ok}});
  return {{"k", config.k},          {"r", config.r},
          {"m_max", m_max},         {"modulus", modulus},
          {"expected_degree", expected_degree}, {"classes", classes_json},
          {"ok", ok}};
}

GrowthReport growth_exponent_check(const JetConfig& config, int m_max) {
  int modulus = 1;
  for (int s = 1; s <= config.k; ++s) modulus = std::lcm(modulus, s);
  const int kr = config.k * config.r;
  if (m_max < 2 * kr * modulus)
    throw Error(ErrorKind::insufficient_range,
                "growth check needs m_max >= " + std::to_string(2 * kr * modulus));
  const HilbertTable table = hilbert_gg(config, m_max);

  GrowthReport report;
  report.config = config;
  report.m_max = m_max;
  report.modulus = modulus;
  report.expected_degree = kr - 1;
  report.ok = true;
  for (int rho = 0; rho < modulus; ++rho) {
    std::vector<Integer> seq;
    for (int m = rho; m <= m_max; m += modulus) seq.push_back(table.coefficients[static_cast<std::size_t>(m)]);
    ResidueClassGrowth cls;
    cls.residue = rho;
    cls.samples = static_cast<int>(seq.size());
    // Difference table: level d holds the d-th differences.
    std::vector<std::vector<Integer>> levels{seq};
    while (levels.back().size() > 1) {
      const auto& prev = levels.back();
      std::vector<Integer> next;
      for (std::size_t i = 0; i + 1 < prev.size(); ++i) next.push_back(prev[i + 1] - prev[i]);
      levels.push_back(std::move(next));
    }
    auto all_zero = [](const std::vector<Integer>& v) {
      return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
    };
    for (std::size_t d = 0; d + 1 < levels.size(); ++d) {
      if (all_zero(levels[d + 1])) {
        cls.degree = static_cast<int>(d);
        break;
      }
    }
    const auto& lead = levels[static_cast<std::size_t>(kr - 1)];
    const bool constant = std::all_of(lead.begin(), lead.end(),
                                      [&](const Integer& x) { return x == lead.front(); });
    cls.leading_difference = lead.front();
    cls.ok = cls.degree == kr - 1 && constant && sgn(lead.front()) > 0 &&
             levels.size() > static_cast<std::size_t>(kr) && all_zero(levels[static_cast<std::size_t>(kr)]);
    report.ok = report.ok && cls.ok;
    report.classes.push_back(std::move(cls));
  }
  return report;
}

}  // namespace jetcalc
