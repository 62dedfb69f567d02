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

#ifndef SKT_LINALG_HPP
#define SKT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "skt/scalar.hpp"

namespace skt {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over Q(sqrt(d)). Columns are images of basis vectors
/// when the matrix is read as an endomorphism: (A e_j)_i = A(i, j).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Builds a matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(std::size_t rows, std::span<const Vector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  /// Row-major flattening, used to treat operators as vectors in End(g).
  const std::vector<Scalar>& data() const { return data_; }
  static Matrix from_data(std::size_t rows, std::size_t cols, std::vector<Scalar> data);

  Matrix transpose() const;
  bool is_zero() const;
  /// Submatrix on the given row and column index sets.
  Matrix restrict(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, std::span<const Scalar> v);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// a*b - b*a
Matrix commutator(const Matrix& a, const Matrix& b);

/// Largest |entry|, exact.
Scalar max_abs(const Matrix& m);
Scalar max_abs(std::span<const Scalar> v);

bool is_zero(std::span<const Scalar> v);
Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);
/// y += s * x
void axpy(const Scalar& s, std::span<const Scalar> x, std::span<Scalar> y);

/// Exact inverse; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Reduced row echelon form (pivots normalized to 1) and its rank.
Matrix rref(Matrix m, std::size_t* rank = nullptr);
std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0} as matrix columns, in canonical (column-RREF) form.
Matrix null_space(const Matrix& m);

/// Incrementally maintained row space in echelon form, for exact membership and
/// rank tests on streams of vectors.
class RowSpace {
 public:
  explicit RowSpace(std::size_t length) : length_(length) {}

  std::size_t length() const { return length_; }
  std::size_t dimension() const { return rows_.size(); }

  /// Residual of v after elimination against the current rows.
  Vector reduce(Vector v) const;
  bool contains(std::span<const Scalar> v) const;
  /// Adds v if it is independent of the current rows; returns whether it was added.
  bool insert(std::span<const Scalar> v);
  /// Echelon rows, sorted by pivot column.
  const std::vector<Vector>& rows() const { return rows_; }

 private:
  std::size_t length_;
  std::vector<Vector> rows_;          // sorted by pivot, pivot entries equal to 1
  std::vector<std::size_t> pivots_;
};

/// A linear subspace of k^n stored by a canonical basis: the columns of
/// `basis` are the rows of the RREF of any spanning set, so two subspaces are
/// equal iff their bases compare equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(ambient, 0) {}
  static Subspace span(std::size_t ambient, std::span<const Vector> vectors);
  static Subspace coordinate(std::size_t ambient, std::span<const std::size_t> indices);

  std::size_t ambient() const { return ambient_; }
  std::size_t dimension() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  Vector vector(std::size_t i) const { return basis_.column(i); }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;
  /// Sum of subspaces.
  Subspace operator+(const Subspace& other) const;
  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
};

/// Orthogonal complement of w with respect to the symmetric form g.
Subspace orthogonal_complement(const Subspace& w, const Matrix& g);

/// g-orthogonal projection of v onto w; g must be positive definite on w.
Vector orthogonal_projection(std::span<const Scalar> v, const Subspace& w, const Matrix& g);

}  // namespace skt

#endif  // SKT_LINALG_HPP
