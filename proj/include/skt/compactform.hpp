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

#ifndef SKT_COMPACTFORM_HPP
#define SKT_COMPACTFORM_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "skt/linalg.hpp"
#include "skt/rootsys.hpp"

namespace skt {

enum class BasisKind { Torus, XRoot, YRoot };

/// Tag of a compact basis vector: Torus(j) = i h_j, XRoot(a) = E_a - E_{-a},
/// YRoot(a) = i (E_a + E_{-a}).
struct BasisLabel {
  BasisKind kind;
  std::size_t index;  // simple-root index for Torus, positive-root index otherwise
};

/// One term c * e_k of a bracket.
struct BracketTerm {
  std::size_t index;
  Scalar coeff;
};

/// Compact real form g = t + sum_a g_a^R with its structure constants and
/// Killing form. Basis order: T_1..T_r, then X_a, Y_a for each positive root a
/// in root order.
class CompactAlgebra {
 public:
  std::size_t dim() const { return labels_.size(); }
  std::size_t rank() const { return roots_.rank(); }
  const RootSystem& root_system() const { return roots_; }
  const ChevalleyConstants& constants() const { return constants_; }
  const std::vector<BasisLabel>& labels() const { return labels_; }
  const BasisLabel& label(std::size_t i) const { return labels_[i]; }
  std::string basis_name(std::size_t i) const;

  std::size_t torus_index(std::size_t j) const { return j; }
  std::size_t x_index(std::size_t root) const { return rank() + 2 * root; }
  std::size_t y_index(std::size_t root) const { return rank() + 2 * root + 1; }
  /// Simple factor owning basis vector i.
  std::size_t factor_of_basis(std::size_t i) const;

  /// Sparse [e_i, e_j].
  const std::vector<BracketTerm>& bracket(std::size_t i, std::size_t j) const { return brackets_[i * dim() + j]; }
  /// Dense c_{ij}^k.
  Scalar structure_constant(std::size_t i, std::size_t j, std::size_t k) const;
  /// Bracket of arbitrary vectors.
  Vector bracket(std::span<const Scalar> x, std::span<const Scalar> y) const;
  /// ad(e_i) as a matrix.
  Matrix ad(std::size_t i) const;

  const Matrix& killing() const { return killing_; }

  /// Index sets of the torus, of g_a^R, and of the simple factor k.
  std::vector<std::size_t> torus_indices() const;
  std::vector<std::size_t> root_block_indices(std::size_t root) const { return {x_index(root), y_index(root)}; }
  std::vector<std::size_t> factor_indices(std::size_t factor) const;

  friend CompactAlgebra build_compact_algebra(const RootSystem& rs, const ChevalleyConstants& cc);

 private:
  RootSystem roots_;
  ChevalleyConstants constants_;
  std::vector<BasisLabel> labels_;
  std::vector<std::vector<BracketTerm>> brackets_;
  Matrix killing_;
};

/// Throws StructuralError naming the first bracket that fails to be real in
/// the compact basis (which happens only for constants that do not belong to `rs`).
CompactAlgebra build_compact_algebra(const RootSystem& rs, const ChevalleyConstants& cc);

/// B restricted to a basis-aligned subspace. Throws std::out_of_range.
Matrix killing_restriction(const CompactAlgebra& alg, std::span<const std::size_t> indices);

}  // namespace skt

#endif  // SKT_COMPACTFORM_HPP
