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

#ifndef SKT_CONNECTION_HPP
#define SKT_CONNECTION_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "skt/compactform.hpp"
#include "skt/defect.hpp"
#include "skt/hermitian.hpp"
#include "skt/linalg.hpp"

namespace skt {

/// Calls f on every strictly increasing k-tuple from {0..n-1}, in lexicographic order.
void for_each_combination(std::size_t n, std::size_t k, const std::function<void(std::span<const std::size_t>)>& f);

/// Left-invariant k-form on g, stored by its values on increasing index tuples.
/// Antisymmetry is structural: operator() sorts the indices and applies the sign.
class InvariantForm {
 public:
  InvariantForm() = default;
  InvariantForm(std::size_t dim, std::size_t degree);

  /// Builds a form from its values on increasing tuples.
  static InvariantForm from_sorted(std::size_t dim, std::size_t degree,
                                   const std::function<Scalar(std::span<const std::size_t>)>& value);

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }

  /// Value on basis vectors e_{idx[0]}, ..., e_{idx[k-1]} in any order.
  Scalar operator()(std::span<const std::size_t> idx) const;
  Scalar operator()(std::size_t i, std::size_t j) const;
  Scalar operator()(std::size_t i, std::size_t j, std::size_t k) const;

  /// Value with the first slot an arbitrary vector and the rest basis vectors.
  Scalar contract_first(std::span<const Scalar> v, std::span<const std::size_t> rest) const;

  void set_sorted(std::span<const std::size_t> idx, Scalar value);
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  Scalar max_abs() const { return skt::max_abs(coeffs_); }
  bool is_zero() const { return skt::is_zero(coeffs_); }

  /// Largest |this - other| over increasing tuples, with the first differing tuple.
  Defect difference(const InvariantForm& other) const;

 private:
  std::size_t rank_of_sorted(std::span<const std::size_t> idx) const;

  std::size_t dim_ = 0;
  std::size_t degree_ = 0;
  std::vector<std::vector<std::size_t>> binom_;
  std::vector<Scalar> coeffs_;
};

/// omega(X, Y) = g(JX, Y). Throws PreconditionError if (g, J) is not compatible.
InvariantForm fundamental_form(const Matrix& g, const Matrix& j);

/// Bismut torsion T(X,Y,Z) = -g([JX,JY],Z) - g([JY,JZ],X) - g([JZ,JX],Y).
InvariantForm bismut_torsion(const HermitianStructure& h, const CompactAlgebra& alg);

/// Chevalley-Eilenberg differential on invariant forms:
/// d w(X_0..X_k) = sum_{i<j} (-1)^{i+j} w([X_i,X_j], X_0..^i..^j..X_k).
/// Throws std::invalid_argument when degree + 1 exceeds dim.
InvariantForm exterior_derivative(const InvariantForm& form, const CompactAlgebra& alg);

/// -d^c omega (X,Y,Z) = d omega (JX, JY, JZ), computed from exterior_derivative.
InvariantForm minus_dc(const InvariantForm& omega, const Matrix& j, const CompactAlgebra& alg);

/// Nomizu operator of an invariant connection: lambda(x)(w, y) is the w-th
/// component of Lambda_{e_x} e_y.
class NomizuOperator {
 public:
  explicit NomizuOperator(std::vector<Matrix> ops) : ops_(std::move(ops)) {}
  std::size_t dim() const { return ops_.size(); }
  const Matrix& operator[](std::size_t x) const { return ops_[x]; }
  const std::vector<Matrix>& operators() const { return ops_; }

 private:
  std::vector<Matrix> ops_;
};

/// g(Lambda_X Y, Z) = g(Lambda^LC_X Y, Z) + T(X,Y,Z)/2 with the Koszul
/// Levi-Civita part (g([X,Y],Z) + g([Z,X],Y) - g([Y,Z],X))/2.
NomizuOperator nomizu(const Matrix& g, const InvariantForm& t, const CompactAlgebra& alg);

/// Bismut Nomizu operator written directly in terms of J brackets:
/// (g([X,Y],Z) + g([Z,X],Y) - g([Y,Z],X) - g([JX,JY],Z) - g([JZ,JX],Y) - g([JY,JZ],X))/2.
NomizuOperator nomizu_from_complex_structure(const HermitianStructure& h, const CompactAlgebra& alg);

/// g(Lambda_X Y, Z) + g(Y, Lambda_X Z); witness (x, y, z).
Defect nomizu_metric_defect(const NomizuOperator& lambda, const Matrix& g);
/// Lambda_X Y - Lambda_Y X - [X,Y] - T(X,Y)^#; witness (x, y, component).
Defect nomizu_torsion_defect(const NomizuOperator& lambda, const InvariantForm& t, const Matrix& g,
                             const CompactAlgebra& alg);
/// [Lambda_X, J]; witness (x, row, col).
Defect nomizu_hermitian_defect(const NomizuOperator& lambda, const Matrix& j);
/// Entrywise difference of two Nomizu operators; witness (x, row, col).
Defect nomizu_difference(const NomizuOperator& a, const NomizuOperator& b);

/// Curvature endomorphisms R(e_i, e_j) = [Lambda_i, Lambda_j] - Lambda_{[e_i, e_j]}.
class CurvatureSet {
 public:
  CurvatureSet(std::size_t dim, std::vector<Matrix> upper);
  std::size_t dim() const { return dim_; }
  /// R(e_i, e_j); antisymmetric, zero on the diagonal.
  Matrix operator()(std::size_t i, std::size_t j) const;
  /// R(e_i, e_j) for i < j without a copy.
  const Matrix& upper(std::size_t i, std::size_t j) const { return upper_[pair_index(i, j)]; }
  const std::vector<Matrix>& all_upper() const { return upper_; }
  bool is_flat() const;

 private:
  std::size_t pair_index(std::size_t i, std::size_t j) const;
  std::size_t dim_;
  std::vector<Matrix> upper_;
};

CurvatureSet curvature(const NomizuOperator& lambda, const CompactAlgebra& alg);

/// g(R(X,Y)Z, V) + g(Z, R(X,Y)V); witness (x, y, z, v).
Defect curvature_skew_defect(const CurvatureSet& r, const Matrix& g);
/// [R(X,Y), J]; witness (x, y, row, col).
Defect curvature_hermitian_defect(const CurvatureSet& r, const Matrix& j);

/// sigma_T(X,Y,Z,V) = sum over cyclic (X,Y,Z) of g(T(X,Y)^#, T(Z,V)^#).
InvariantForm sigma_t(const InvariantForm& t, const Matrix& g);

/// Residual of the skew-torsion Bianchi identity
///   sum_cyc R(X,Y,Z,V) = dT(X,Y,Z,V) - sigma_T(X,Y,Z,V) + (nabla_V T)(X,Y,Z),
/// with R(X,Y,Z,V) = g(R(X,Y)Z, V) and, for invariant T,
/// (nabla_V T)(X,Y,Z) = -T(Lambda_V X,Y,Z) - T(X,Lambda_V Y,Z) - T(X,Y,Lambda_V Z).
/// Both sides are antisymmetric in (X,Y,Z), so X < Y < Z and all V cover
/// every basis 4-tuple. Witness (x, y, z, v).
Defect bianchi_check(const CurvatureSet& r, const InvariantForm& t, const NomizuOperator& lambda, const Matrix& g,
                     const CompactAlgebra& alg);

}  // namespace skt

#endif  // SKT_CONNECTION_HPP
