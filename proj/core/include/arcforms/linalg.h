// Copyright 2026 The arcforms Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ARCFORMS_LINALG_H_
#define ARCFORMS_LINALG_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "arcforms/field.h"

namespace arcforms {

// Dense row-major matrix of field elements. The field is not stored; every
// operation takes it explicitly.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Element> data);

  static Matrix Identity(std::size_t n);
  static Matrix FromRows(std::span<const Vector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Element operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Element> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector RowVector(std::size_t r) const {
    return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  Vector Column(std::size_t c) const;

  void AppendRow(std::span<const Element> row);
  void SwapRows(std::size_t a, std::size_t b);

  const std::vector<Element>& data() const { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

Matrix Transpose(const Matrix& m);
Matrix Multiply(const Field& f, const Matrix& a, const Matrix& b);
Vector Apply(const Field& f, const Matrix& m, std::span<const Element> v);
Element Dot(const Field& f, std::span<const Element> a, std::span<const Element> b);
bool IsZeroVector(std::span<const Element> v);

// Determinant by Gaussian elimination. Throws kNotSquare.
Element Det(const Field& f, Matrix m);
// Determinant by Laplace expansion along the first row. Exponential cost;
// intended as an independent cross-check for small matrices.
Element DetCofactor(const Field& f, const Matrix& m);

struct RowEchelon {
  Matrix reduced;                  // reduced row-echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot columns, ascending
  std::size_t rank() const { return pivots.size(); }
};

RowEchelon ReducedRowEchelon(const Field& f, Matrix m);
std::size_t Rank(const Field& f, const Matrix& m);

struct Nullspace {
  std::size_t rank = 0;
  // Rows span {v : m v = 0}, in reduced row-echelon form.
  Matrix basis;
};

Nullspace RightNullspace(const Field& f, const Matrix& m);

std::optional<Matrix> Inverse(const Field& f, const Matrix& m);

// Solves m x = rhs; nullopt when inconsistent. Free variables are set to 0.
std::optional<Vector> Solve(const Field& f, const Matrix& m,
                            std::span<const Element> rhs);

}  // namespace arcforms

#endif  // ARCFORMS_LINALG_H_
