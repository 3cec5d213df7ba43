// Copyright 2026 The hyparr Authors.
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

#ifndef HYPARR_LINALG_HPP_
#define HYPARR_LINALG_HPP_

#include <cstddef>
#include <vector>

#include "hyparr/field.hpp"

namespace hyparr {

using Vector = std::vector<FieldValue>;

// Dense row-major matrix over one field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, FieldTag tag = {});

  // Throws DimensionError on ragged input and FieldError on mixed tags.
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix identity(std::size_t n, FieldTag tag = {});

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldTag tag() const { return tag_; }
  bool is_square() const { return rows_ == cols_; }

  FieldValue& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const FieldValue& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  std::vector<Vector> row_vectors() const;
  Matrix transpose() const;

  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend Matrix operator+(const Matrix& x, const Matrix& y);
  friend Matrix operator-(const Matrix& x, const Matrix& y);
  friend Vector operator*(const Matrix& x, const Vector& v);
  friend bool operator==(const Matrix& x, const Matrix& y) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldTag tag_;
  std::vector<FieldValue> data_;
};

// Orthogonal projections onto the row span of T and onto its complement.
struct ProjectorPair {
  Matrix p;
  Matrix q;
};

FieldValue dot(const Vector& x, const Vector& y);
Vector scale(const Vector& v, const FieldValue& s);
Vector add(const Vector& x, const Vector& y);
Vector sub(const Vector& x, const Vector& y);
bool is_zero(const Vector& v);

// Fraction-free (Bareiss) elimination with exact nonzero pivot search.
FieldValue det(const Matrix& m);
std::size_t rank(const Matrix& m);

// Unique solution of a x = b. Throws SingularMatrixError if det(a) = 0.
Vector solve(const Matrix& a, const Vector& b);

// Adjugate over determinant up to 6x6, Gauss-Jordan beyond.
Matrix inverse(const Matrix& a);

// Basis of {x : m x = 0} from the reduced row echelon form. Vector t has a
// one in the t-th free column (ascending) and zeros in the other free columns.
std::vector<Vector> kernel_basis(const Matrix& m);

// One solution of a x = b, or nothing when the system is inconsistent. Free
// variables are set to zero.
bool particular_solution(const Matrix& a, const Vector& b, Vector* x);

// P = T^t (T T^t)^{-1} T and Q = I - P. Throws SingularMatrixError when the
// rows of T are dependent.
ProjectorPair projectors(const Matrix& span_rows);

}  // namespace hyparr

#endif  // HYPARR_LINALG_HPP_
