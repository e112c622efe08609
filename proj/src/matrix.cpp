/* Copyright 2026 The compoz Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "compoz/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace compoz {

Matrix::Matrix(FieldContext ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), data_(rows * cols, ctx_.zero()) {}

Matrix Matrix::identity(const FieldContext& ctx, std::size_t n) {
  Matrix m(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ctx.one();
  return m;
}

Matrix Matrix::from_rows(const FieldContext& ctx, const std::vector<std::vector<u64>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  Matrix m(ctx, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = ctx.constant(rows[i][j]);
  }
  return m;
}

std::vector<FieldElement> Matrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<FieldElement> Matrix::col(std::size_t j) const {
  std::vector<FieldElement> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(ctx_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const FieldElement& x) { return x.is_zero(); });
}

Matrix Matrix::pow(u64 e) const {
  if (rows_ != cols_) throw std::invalid_argument("matrix power of a non-square matrix");
  Matrix result = identity(ctx_, rows_);
  Matrix b = *this;
  while (e) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

namespace {
void require_shape(const Matrix& a, const Matrix& b) {
  if (!(a.context() == b.context())) throw std::invalid_argument("matrix arithmetic: context mismatch");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix arithmetic: shape mismatch");
}
}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_shape(a, b);
  Matrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_shape(a, b);
  Matrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (!(a.context() == b.context())) throw std::invalid_argument("matrix product: context mismatch");
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: inner dimensions differ");
  Matrix r(a.context(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const FieldElement& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  require_shape(a, b);
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    if (!(a.data_[i] == b.data_[i])) return false;
  return true;
}

RowEchelon row_reduce(const Matrix& a) {
  RowEchelon out{a, {}};
  Matrix& m = out.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    const FieldElement inv = m(r, c).inverse();
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const FieldElement factor = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

std::size_t rank(const Matrix& a) { return row_reduce(a).rank(); }

}  // namespace compoz
