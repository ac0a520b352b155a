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

#include "jetcalc/linalg.hpp"

#include <bit>
#include <cstdint>
#include <utility>

#include "jetcalc/error.hpp"

namespace jetcalc {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  for (const auto& row : rows) push_row(Vector(row));
}

void Matrix::push_row(const Vector& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_)
    throw Error(ErrorKind::invalid_argument, "ragged matrix row");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::invalid_argument, "dimension mismatch");
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  std::vector<std::size_t> support;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t r = lead;
    while (r < m.rows() && m.at(r, col).is_zero()) ++r;
    if (r == m.rows()) continue;
    if (r != lead)
      for (std::size_t j = col; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(lead, j));
    const Rational inv = Rational(1) / m.at(lead, col);
    support.clear();
    for (std::size_t j = col; j < m.cols(); ++j) {
      if (m.at(lead, j).is_zero()) continue;
      m.at(lead, j) *= inv;
      support.push_back(j);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead || m.at(i, col).is_zero()) continue;
      const Rational factor = m.at(i, col);
      for (std::size_t j : support) m.at(i, j) -= factor * m.at(lead, j);
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return row_reduce(m).size(); }

Vector normalize_integer(Vector v) {
  Integer l = 1;
  for (const Rational& x : v)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
  Integer g = 0;
  int lead_sign = 0;
  for (const Rational& x : v) {
    const Integer scaled = x.numerator() * (l / x.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
    if (lead_sign == 0) lead_sign = x.sign();
  }
  if (g == 0) return v;
  const Rational scale = Rational(l, g) * Rational(lead_sign);
  for (Rational& x : v) x *= scale;
  return v;
}

std::vector<Vector> nullspace(const Matrix& m) {
  Matrix reduced = m;
  const std::vector<std::size_t> pivots = row_reduce(reduced);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = Rational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced.at(i, free);
    basis.push_back(normalize_integer(std::move(v)));
  }
  return basis;
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& entries) {
  const std::size_t n = entries.size();
  for (const auto& row : entries)
    if (row.size() != n) throw Error(ErrorKind::invalid_argument, "determinant of non-square matrix");
  if (n == 0) return Polynomial(1);
  if (n > 20) throw Error(ErrorKind::invalid_argument, "determinant too large");

  // minors[S] = det(rows 0..|S|-1, columns S), built up one row at a time.
  std::vector<Polynomial> minors(std::size_t{1} << n);
  minors[0] = Polynomial(1);
  for (std::uint32_t set = 1; set < (1U << n); ++set) {
    const int t = std::popcount(set);
    const std::size_t row = static_cast<std::size_t>(t - 1);
    PolynomialAccumulator acc;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(set & (1U << c))) continue;
      const std::uint32_t rest = set & ~(1U << c);
      if (minors[rest].is_zero() || entries[row][c].is_zero()) continue;
      const int greater = std::popcount(set >> (c + 1));
      const Polynomial prod = entries[row][c] * minors[rest];
      acc.add(prod, Rational(greater % 2 == 0 ? 1 : -1));
    }
    minors[set] = acc.finish();
  }
  return minors.back();
}

}  // namespace jetcalc
