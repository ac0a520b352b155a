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

#ifndef JETCALC_LINALG_HPP
#define JETCALC_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "jetcalc/polynomial.hpp"
#include "jetcalc/rational.hpp"

namespace jetcalc {

using Vector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector apply(const Vector& v) const;

  /// Appends a row; the first row fixes the column count when cols() == 0.
  void push_row(const Vector& row);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

std::size_t rank(Matrix m);

/// Kernel basis from the reduced row echelon form, one vector per free
/// column in increasing column order. Each vector is scaled to integer
/// entries with content 1 and a positive first nonzero entry.
std::vector<Vector> nullspace(const Matrix& m);

/// Scales v to coprime integers with a positive first nonzero entry.
Vector normalize_integer(Vector v);

/// Determinant of a square polynomial matrix by Laplace expansion over
/// column subsets (exact, division free).
Polynomial determinant(const std::vector<std::vector<Polynomial>>& entries);

}  // namespace jetcalc

#endif  // JETCALC_LINALG_HPP
