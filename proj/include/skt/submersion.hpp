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

#ifndef SKT_SUBMERSION_HPP
#define SKT_SUBMERSION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "skt/compactform.hpp"
#include "skt/connection.hpp"
#include "skt/defect.hpp"
#include "skt/hermitian.hpp"
#include "skt/holonomy.hpp"
#include "skt/linalg.hpp"

namespace skt {

/// Splitting g = V + H with V = h_I = t + sum_{a in Delta_I} g_a^R and H its
/// g-orthogonal complement. Both are spanned by basis vectors, since g is
/// block diagonal over t and the root spaces.
struct SplitData {
  std::vector<std::size_t> subset;      // I, simple-root indices
  std::vector<std::size_t> roots;       // Delta_I, positive-root indices
  std::vector<std::size_t> vertical;    // basis indices of V
  std::vector<std::size_t> horizontal;  // basis indices of H
  Matrix vertical_projector;
  Matrix horizontal_projector;
  /// Set when built without the I in I_max precondition.
  bool bypassed = false;

  bool is_vertical(std::size_t i) const;
};

struct SplitValidation {
  Defect subalgebra;     // horizontal coefficient of [V, V]; witness (v, w, h)
  Defect j_invariance;   // J entries mixing V and H; witness (row, col)
  Defect orthogonality;  // g(V, H); witness (v, h)
  bool ok() const { return subalgebra.ok() && j_invariance.ok() && orthogonality.ok(); }
};

/// "{}", "{a2}", "{a1,a3}".
std::string subset_label(const std::vector<std::size_t>& subset);

/// Throws PreconditionError when I is not contained in i_max, and
/// StructuralError when the split fails its exhaustive validation.
SplitData build_split(const SktParameters& skt, const std::vector<std::size_t>& subset, const HermitianStructure& h,
                      const CompactAlgebra& alg);
/// Same bookkeeping without the I in I_max precondition; for negative controls.
SplitData build_split_unchecked(const std::vector<std::size_t>& subset, const HermitianStructure& h,
                                const CompactAlgebra& alg);
SplitValidation validate_split(const SplitData& split, const HermitianStructure& h, const CompactAlgebra& alg);

/// max |T(V, W, X)|, V, W vertical and X horizontal; witness (v, w, x).
Defect torsion_type_check(const InvariantForm& t, const SplitData& split);

/// max |T(X, JY, JZ) - T(X, Y, Z)|, X vertical and Y, Z horizontal.
Defect one_one_check(const InvariantForm& t, const Matrix& j, const SplitData& split);

/// Type components of T by projector contraction: T^H has all three slots
/// horizontal, T^m two horizontal slots and one vertical.
InvariantForm horizontal_component(const InvariantForm& t, const SplitData& split);
InvariantForm mixed_component(const InvariantForm& t, const SplitData& split);

struct ObstructionResult {
  /// d(T^H) + 2 sigma_{T^m} on horizontal 4-tuples; must vanish.
  Defect identity;
  /// max |sigma_{T^m}| on horizontal 4-tuples: the base is again a closed
  /// torsion geometry iff this is zero.
  Defect obstruction;
};
ObstructionResult projected_torsion_obstruction(const InvariantForm& t, const SplitData& split, const Matrix& g,
                                                const CompactAlgebra& alg);

struct MixedCurvatureResult {
  /// g(R(X,Y)Z, V) for X, Y horizontal and Z, V vertical.
  Defect curvature;
  /// g(Lambda_X Y, Z) - g([X,Y], Z) - T(X,Y,Z) for X vertical, Y, Z horizontal.
  /// For left-invariant fields this is the projectable-field statement
  /// g(nabla_X Y, Z) = T(X, Y, Z) with Y basic.
  Defect connection;
  /// g(Lambda_X Y, Z) - T(X,Y,Z) without the bracket term; diagnostic only.
  Defect connection_literal;
};
MixedCurvatureResult mixed_curvature_check(const CurvatureSet& r, const NomizuOperator& lambda, const InvariantForm& t,
                                           const SplitData& split, const Matrix& g, const CompactAlgebra& alg);

/// Invariance of V and H under every span operator.
Defect holonomy_split_check(const OperatorSpan& span, const SplitData& split);

struct CheckRecord {
  std::string name;
  bool pass = false;
  Defect defect;
};

struct SubmersionReport {
  std::vector<std::size_t> subset;
  std::size_t vertical_dim = 0;
  std::size_t horizontal_dim = 0;
  bool negative_control = false;
  std::vector<CheckRecord> checks;
  /// max |sigma_{T^m}| on horizontal tuples; reported, not a pass/fail check.
  Defect base_obstruction;
  /// Diagnostic: the bracket-free reading of the connection identity.
  Defect connection_literal;
  bool all_pass() const;
};

/// Runs every check on a split. `span` may be null when holonomy was skipped.
SubmersionReport check_submersion(const SplitData& split, const HermitianStructure& h, const InvariantForm& t,
                                  const NomizuOperator& lambda, const CurvatureSet& r, const OperatorSpan* span,
                                  const CompactAlgebra& alg);

}  // namespace skt

#endif  // SKT_SUBMERSION_HPP
