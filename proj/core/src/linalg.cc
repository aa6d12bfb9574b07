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

#include "arcforms/linalg.h"

#include <algorithm>
#include <string>
#include <utility>

#include "arcforms/errors.h"

namespace arcforms {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Element> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix data size mismatch");
  }
}

Matrix Matrix::Identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Field::one();
  return m;
}

Matrix Matrix::FromRows(std::span<const Vector> rows, std::size_t cols) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.AppendRow(r);
  return m;
}

Vector Matrix::Column(std::size_t c) const {
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void Matrix::AppendRow(std::span<const Element> row) {
  if (row.size() != cols_) {
    throw Error(ErrorCode::kDimensionMismatch, "row length mismatch");
  }
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

void Matrix::SwapRows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_,
                   data_.begin() + b * cols_);
}

Matrix Transpose(const Matrix& m) {
  Matrix out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
  }
  return out;
}

Matrix Multiply(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix product shape mismatch");
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Element x = a(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) = f.Add(out(i, j), f.Mul(x, b(l, j)));
      }
    }
  }
  return out;
}

Vector Apply(const Field& f, const Matrix& m, std::span<const Element> v) {
  if (v.size() != m.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix-vector shape mismatch");
  }
  Vector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out[r] = Dot(f, m.row(r), v);
  return out;
}

Element Dot(const Field& f, std::span<const Element> a, std::span<const Element> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "dot product length mismatch");
  }
  Element acc = Field::zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    acc = f.Add(acc, f.Mul(a[i], b[i]));
  }
  return acc;
}

bool IsZeroVector(std::span<const Element> v) {
  return std::all_of(v.begin(), v.end(), [](Element e) { return e.is_zero(); });
}

Element Det(const Field& f, Matrix m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::kNotSquare, std::to_string(m.rows()) + "x" +
                                           std::to_string(m.cols()) + " matrix");
  }
  const std::size_t n = m.rows();
  Element det = Field::one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Field::zero();
    if (pivot != col) {
      m.SwapRows(pivot, col);
      det = f.Neg(det);
    }
    const Element p = m(col, col);
    det = f.Mul(det, p);
    const Element p_inv = f.Inv(p);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const Element factor = f.Mul(m(r, col), p_inv);
      for (std::size_t c = col; c < n; ++c) {
        m(r, c) = f.Sub(m(r, c), f.Mul(factor, m(col, c)));
      }
    }
  }
  return det;
}

Element DetCofactor(const Field& f, const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::kNotSquare, "cofactor determinant of non-square matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return Field::one();
  if (n == 1) return m(0, 0);
  Element acc = Field::zero();
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    Element term = f.Mul(m(0, j), DetCofactor(f, minor));
    acc = (j % 2 == 0) ? f.Add(acc, term) : f.Sub(acc, term);
  }
  return acc;
}

RowEchelon ReducedRowEchelon(const Field& f, Matrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    m.SwapRows(pivot, row);
    const Element inv = f.Inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = f.Mul(m(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Element factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        m(r, c) = f.Sub(m(r, c), f.Mul(factor, m(row, c)));
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  Matrix reduced(0, m.cols());
  for (std::size_t r = 0; r < row; ++r) reduced.AppendRow(m.row(r));
  out.reduced = std::move(reduced);
  return out;
}

std::size_t Rank(const Field& f, const Matrix& m) {
  return ReducedRowEchelon(f, m).rank();
}

Nullspace RightNullspace(const Field& f, const Matrix& m) {
  RowEchelon ech = ReducedRowEchelon(f, m);
  Nullspace out;
  out.rank = ech.rank();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : ech.pivots) is_pivot[c] = true;
  Matrix basis(0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = Field::one();
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
      v[ech.pivots[i]] = f.Neg(ech.reduced(i, free));
    }
    basis.AppendRow(v);
  }
  out.basis = ReducedRowEchelon(f, std::move(basis)).reduced;
  return out;
}

std::optional<Matrix> Inverse(const Field& f, const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::kNotSquare, "inverse of non-square matrix");
  }
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Field::one();
  }
  RowEchelon ech = ReducedRowEchelon(f, std::move(aug));
  if (ech.rank() < n || ech.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ech.reduced(r, n + c);
  }
  return inv;
}

std::optional<Vector> Solve(const Field& f, const Matrix& m,
                            std::span<const Element> rhs) {
  if (rhs.size() != m.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "right-hand side length mismatch");
  }
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  RowEchelon ech = ReducedRowEchelon(f, std::move(aug));
  if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    x[ech.pivots[i]] = ech.reduced(i, m.cols());
  }
  return x;
}

}  // namespace arcforms
