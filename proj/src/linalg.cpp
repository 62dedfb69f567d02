// Copyright 2026 The sktholo Authors
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

#include "skt/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace skt {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::span<const Vector> columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("Matrix::from_columns: length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_data(std::size_t rows, std::size_t cols, std::vector<Scalar> data) {
  if (data.size() != rows * cols) throw std::invalid_argument("Matrix::from_data: size mismatch");
  Matrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.data_ = std::move(data);
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const { return skt::is_zero(data_); }

Matrix Matrix::restrict(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
  Matrix out(row_idx.size(), col_idx.size());
  for (std::size_t r = 0; r < row_idx.size(); ++r) {
    for (std::size_t c = 0; c < col_idx.size(); ++c) {
      if (row_idx[r] >= rows_ || col_idx[c] >= cols_) throw std::out_of_range("Matrix::restrict: index out of range");
      out(r, c) = (*this)(row_idx[r], col_idx[c]);
    }
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("Matrix +: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!rhs.data_[i].is_zero()) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("Matrix -: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!rhs.data_[i].is_zero()) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_)
    if (!x.is_zero()) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix *: shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

Vector operator*(const Matrix& a, std::span<const Scalar> v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("Matrix * vector: shape mismatch");
  Vector out(a.rows_);
  for (std::size_t k = 0; k < a.cols_; ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t i = 0; i < a.rows_; ++i)
      if (!a(i, k).is_zero()) out[i] += a(i, k) * v[k];
  }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Scalar max_abs(std::span<const Scalar> v) {
  Scalar best;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    Scalar ax = x.abs();
    if (ax > best) best = std::move(ax);
  }
  return best;
}

Scalar max_abs(const Matrix& m) { return max_abs(m.data()); }

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

void axpy(const Scalar& s, std::span<const Scalar> x, std::span<Scalar> y) {
  if (x.size() != y.size()) throw std::invalid_argument("axpy: length mismatch");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += s * x[i];
}

Matrix rref(Matrix m, std::size_t* rank_out) {
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(lead_row, c));
    const Scalar inv = m(lead_row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c)
      if (!m(lead_row, c).is_zero()) m(lead_row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(lead_row, c).is_zero()) m(r, c) -= factor * m(lead_row, c);
    }
    ++lead_row;
  }
  if (rank_out != nullptr) *rank_out = lead_row;
  return m;
}

std::size_t rank(const Matrix& m) {
  std::size_t r = 0;
  rref(m, &r);
  return r;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix is not square");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  std::size_t rk = 0;
  aug = rref(std::move(aug), &rk);
  for (std::size_t i = 0; i < n; ++i)
    if (!(aug(i, i) == Scalar(1))) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

Matrix null_space(const Matrix& m) {
  std::size_t rk = 0;
  const Matrix reduced = rref(m, &rk);
  std::vector<std::size_t> pivot_cols;
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t r = 0; r < rk; ++r) {
    std::size_t c = 0;
    while (reduced(r, c).is_zero()) ++c;
    pivot_cols.push_back(c);
    is_pivot[c] = true;
  }
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < rk; ++r) v[pivot_cols[r]] = -reduced(r, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), basis).basis();
}

Vector RowSpace::reduce(Vector v) const {
  if (v.size() != length_) throw std::invalid_argument("RowSpace: length mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar& coeff = v[pivots_[i]];
    if (coeff.is_zero()) continue;
    const Scalar factor = -coeff;
    axpy(factor, rows_[i], v);
  }
  return v;
}

bool RowSpace::contains(std::span<const Scalar> v) const {
  return is_zero(reduce(Vector(v.begin(), v.end())));
}

bool RowSpace::insert(std::span<const Scalar> v) {
  Vector residual = reduce(Vector(v.begin(), v.end()));
  std::size_t pivot = 0;
  while (pivot < residual.size() && residual[pivot].is_zero()) ++pivot;
  if (pivot == residual.size()) return false;
  const Scalar inv = residual[pivot].inverse();
  for (auto& x : residual)
    if (!x.is_zero()) x *= inv;
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pivot);
  rows_.insert(rows_.begin() + pos, std::move(residual));
  return true;
}

Subspace Subspace::span(std::size_t ambient, std::span<const Vector> vectors) {
  Matrix stacked(vectors.size(), ambient);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != ambient) throw std::invalid_argument("Subspace::span: length mismatch");
    for (std::size_t c = 0; c < ambient; ++c) stacked(r, c) = vectors[r][c];
  }
  std::size_t rk = 0;
  const Matrix reduced = rref(std::move(stacked), &rk);
  Subspace out(ambient);
  out.basis_ = Matrix(ambient, rk);
  for (std::size_t r = 0; r < rk; ++r)
    for (std::size_t c = 0; c < ambient; ++c) out.basis_(c, r) = reduced(r, c);
  return out;
}

Subspace Subspace::coordinate(std::size_t ambient, std::span<const std::size_t> indices) {
  std::vector<Vector> vectors;
  for (std::size_t i : indices) {
    if (i >= ambient) throw std::out_of_range("Subspace::coordinate: index out of range");
    Vector e(ambient);
    e[i] = 1;
    vectors.push_back(std::move(e));
  }
  return span(ambient, vectors);
}

bool Subspace::contains(std::span<const Scalar> v) const {
  RowSpace rows(ambient_);
  for (std::size_t i = 0; i < dimension(); ++i) rows.insert(vector(i));
  return rows.contains(v);
}

bool Subspace::contains(const Subspace& other) const {
  RowSpace rows(ambient_);
  for (std::size_t i = 0; i < dimension(); ++i) rows.insert(vector(i));
  for (std::size_t i = 0; i < other.dimension(); ++i)
    if (!rows.contains(other.vector(i))) return false;
  return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("Subspace +: ambient mismatch");
  std::vector<Vector> vectors;
  for (std::size_t i = 0; i < dimension(); ++i) vectors.push_back(vector(i));
  for (std::size_t i = 0; i < other.dimension(); ++i) vectors.push_back(other.vector(i));
  return span(ambient_, vectors);
}

Subspace orthogonal_complement(const Subspace& w, const Matrix& g) {
  const Matrix constraints = w.basis().transpose() * g;
  std::vector<Vector> basis;
  const Matrix ns = null_space(constraints);
  for (std::size_t i = 0; i < ns.cols(); ++i) basis.push_back(ns.column(i));
  return Subspace::span(w.ambient(), basis);
}

Vector orthogonal_projection(std::span<const Scalar> v, const Subspace& w, const Matrix& g) {
  if (w.dimension() == 0) return Vector(v.size());
  const Matrix wt_g = w.basis().transpose() * g;
  const Matrix gram = wt_g * w.basis();
  const auto gram_inv = inverse(gram);
  if (!gram_inv) throw std::domain_error("orthogonal_projection: form is degenerate on the subspace");
  const Vector rhs = wt_g * v;
  const Vector coeffs = *gram_inv * rhs;
  return w.basis() * coeffs;
}

}  // namespace skt
