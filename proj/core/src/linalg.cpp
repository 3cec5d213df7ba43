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


#include "hyparr/linalg.hpp"

#include <string>
#include <utility>

#include "hyparr/errors.hpp"

namespace hyparr {
namespace {

void require_same_shape(const Matrix& x, const Matrix& y, const char* op) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw DimensionError(std::string("shape mismatch in ") + op);
  }
}

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    const FieldValue inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const FieldValue f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Matrix gauss_jordan_inverse(const Matrix& a) {
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n, a.tag());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = FieldValue::one(a.tag());
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) {
    throw SingularMatrixError("matrix is singular");
  }
  Matrix inv(n, n, a.tag());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  }
  return inv;
}

Matrix minor_matrix(const Matrix& a, std::size_t skip_r, std::size_t skip_c) {
  Matrix m(a.rows() - 1, a.cols() - 1, a.tag());
  for (std::size_t i = 0, mi = 0; i < a.rows(); ++i) {
    if (i == skip_r) continue;
    for (std::size_t j = 0, mj = 0; j < a.cols(); ++j) {
      if (j == skip_c) continue;
      m(mi, mj++) = a(i, j);
    }
    ++mi;
  }
  return m;
}

Matrix adjugate_inverse(const Matrix& a) {
  const std::size_t n = a.rows();
  const FieldValue d = det(a);
  if (d.is_zero()) throw SingularMatrixError("matrix is singular");
  Matrix inv(n, n, a.tag());
  if (n == 1) {
    inv(0, 0) = d.inverse();
    return inv;
  }
  const FieldValue dinv = d.inverse();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      FieldValue cof = det(minor_matrix(a, i, j));
      if ((i + j) % 2 == 1) cof = -cof;
      inv(j, i) = cof * dinv;
    }
  }
  return inv;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, FieldTag tag)
    : rows_(rows),
      cols_(cols),
      tag_(tag),
      data_(rows * cols, FieldValue::zero(tag)) {}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return Matrix();
  const std::size_t cols = rows[0].size();
  const FieldTag tag = cols > 0 ? rows[0][0].tag() : FieldTag{};
  Matrix m(rows.size(), cols, tag);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) {
      if (rows[i][j].tag() != tag) {
        throw FieldError("matrix entries from different fields");
      }
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::identity(std::size_t n, FieldTag tag) {
  Matrix m(n, n, tag);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldValue::one(tag);
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Vector Matrix::col(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, c));
  return v;
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, tag_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols() != y.rows()) throw DimensionError("shape mismatch in product");
  Matrix z(x.rows(), y.cols(), x.tag());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t k = 0; k < x.cols(); ++k) {
      if (x(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) z(i, j) += x(i, k) * y(k, j);
    }
  }
  return z;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  require_same_shape(x, y, "sum");
  Matrix z = x;
  for (std::size_t i = 0; i < z.data_.size(); ++i) z.data_[i] += y.data_[i];
  return z;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  require_same_shape(x, y, "difference");
  Matrix z = x;
  for (std::size_t i = 0; i < z.data_.size(); ++i) z.data_[i] -= y.data_[i];
  return z;
}

Vector operator*(const Matrix& x, const Vector& v) {
  if (x.cols() != v.size()) throw DimensionError("shape mismatch in product");
  Vector out(x.rows(), FieldValue::zero(x.tag()));
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) out[i] += x(i, j) * v[j];
  }
  return out;
}

FieldValue dot(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw DimensionError("dot of unequal lengths");
  if (x.empty()) return FieldValue();
  FieldValue s = x[0] * y[0];
  for (std::size_t i = 1; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Vector scale(const Vector& v, const FieldValue& s) {
  Vector out = v;
  for (auto& x : out) x *= s;
  return out;
}

Vector add(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw DimensionError("sum of unequal lengths");
  Vector out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += y[i];
  return out;
}

Vector sub(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw DimensionError("difference of unequal lengths");
  Vector out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= y[i];
  return out;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

FieldValue det(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return FieldValue::one(m.tag());
  Matrix a = m;
  FieldValue prev = FieldValue::one(m.tag());
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return FieldValue::zero(m.tag());
      for (std::size_t j = k; j < n; ++j) std::swap(a(p, j), a(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

std::size_t rank(const Matrix& m) {
  Matrix a = m;
  return rref(a).size();
}

Vector solve(const Matrix& a, const Vector& b) {
  if (!a.is_square()) throw DimensionError("solve needs a square matrix");
  if (b.size() != a.rows()) throw DimensionError("right-hand side length");
  const std::size_t n = a.rows();
  Matrix aug(n, n + 1, a.tag());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) {
    throw SingularMatrixError("singular system");
  }
  return aug.col(n);
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("inverse of a non-square matrix");
  if (a.rows() == 0) return a;
  return a.rows() <= 6 ? adjugate_inverse(a) : gauss_jordan_inverse(a);
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  Matrix a = m;
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols(), FieldValue::zero(m.tag()));
    v[f] = FieldValue::one(m.tag());
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool particular_solution(const Matrix& a, const Vector& b, Vector* x) {
  if (b.size() != a.rows()) throw DimensionError("right-hand side length");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1, a.tag());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == n) return false;
  Vector out(n, FieldValue::zero(a.tag()));
  for (std::size_t r = 0; r < pivots.size(); ++r) out[pivots[r]] = aug(r, n);
  *x = std::move(out);
  return true;
}

ProjectorPair projectors(const Matrix& span_rows) {
  const Matrix& t = span_rows;
  if (t.rows() > t.cols()) throw DimensionError("more spanning rows than columns");
  const Matrix tt = t.transpose();
  const Matrix gram = t * tt;
  if (det(gram).is_zero()) {
    throw SingularMatrixError("spanning rows are linearly dependent");
  }
  ProjectorPair out;
  out.p = tt * inverse(gram) * t;
  out.q = Matrix::identity(t.cols(), t.tag()) - out.p;
  return out;
}

}  // namespace hyparr
