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

#ifndef COMPOZ_MATRIX_HPP
#define COMPOZ_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "compoz/field.hpp"

namespace compoz {

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldContext ctx, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldContext& ctx, std::size_t n);
  /// Entries given as integers mod p, row by row.
  static Matrix from_rows(const FieldContext& ctx, const std::vector<std::vector<u64>>& rows);

  const FieldContext& context() const { return ctx_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const FieldElement& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<FieldElement> row(std::size_t i) const;
  std::vector<FieldElement> col(std::size_t j) const;

  Matrix transpose() const;
  bool is_zero() const;
  Matrix pow(u64 e) const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldContext ctx_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

struct RowEchelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

RowEchelon row_reduce(const Matrix& a);
std::size_t rank(const Matrix& a);

}  // namespace compoz

#endif  // COMPOZ_MATRIX_HPP
