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

#ifndef SKT_HOLONOMY_HPP
#define SKT_HOLONOMY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "skt/compactform.hpp"
#include "skt/connection.hpp"
#include "skt/defect.hpp"
#include "skt/hermitian.hpp"
#include "skt/linalg.hpp"

namespace skt {

/// Linear span of the curvature endomorphisms closed under left composition
/// with every Lambda_{e_k}. It has the same invariant subspaces as the
/// holonomy algebra.
struct OperatorSpan {
  std::size_t dim = 0;
  /// Linearly independent operators in insertion order.
  std::vector<Matrix> basis;
  /// Span dimension after each round; round 0 holds the curvature alone.
  /// The last entry repeats the previous one (stabilization).
  std::vector<std::size_t> generation_log;

  std::size_t dimension() const { return basis.size(); }
};

OperatorSpan generate_span(const NomizuOperator& lambda, const CurvatureSet& r, const CompactAlgebra& alg);

enum class BlockKind { Torus, RootSpace, Residual, Trivial, Mixed, TrivialWhole };

struct HolonomyBlock {
  Subspace space;
  BlockKind kind;
  /// Positive root for RootSpace, simple factor for Residual.
  std::optional<std::size_t> tag;
  /// True when every span operator annihilates the block.
  bool trivial = false;
};

std::string block_label(const HolonomyBlock& block, const CompactAlgebra& alg);

struct HolonomyDecomposition {
  std::vector<HolonomyBlock> blocks;
  /// Common kernel of the span operators.
  Subspace trivial_part;
};

/// Trivial part first (torus, then whole root spaces, then any remainder),
/// then orbit blocks seeded by the first basis vector not yet covered,
/// projected g-orthogonally off the blocks found so far. Orbits do not
/// certify irreducibility.
HolonomyDecomposition invariant_decomposition(const OperatorSpan& span, const Matrix& g, const CompactAlgebra& alg);

/// Largest coordinate of the residual of A w modulo W over span operators A
/// and basis vectors w of W; witness (operator, basis vector, coordinate).
Defect invariance_defect(const OperatorSpan& span, const Subspace& w);

struct DecompositionVerification {
  Defect invariance;          // every block
  Defect complement_invariance;  // g-orthocomplement of every block
  Defect orthogonality;       // g(b_i, b_j) across different blocks; witness (block, block, vec, vec)
  bool spans_algebra = false;
  bool ok() const { return invariance.ok() && complement_invariance.ok() && orthogonality.ok() && spans_algebra; }
};

DecompositionVerification verify_decomposition(const HolonomyDecomposition& dec, const OperatorSpan& span,
                                               const Matrix& g);

struct ClauseResult {
  std::string name;
  bool pass = false;
  Defect defect;
  std::string detail;
};

struct ComparisonReport {
  /// (i) torus trivial, (ii) each g_a^R for a in Delta_{I_max} invariant,
  /// (iii) sum over the remaining positive roots invariant, (iv) simple
  /// factors invariant.
  std::vector<ClauseResult> clauses;
  /// Orbit blocks found inside the predicted residual sum.
  std::size_t residual_blocks_found = 0;
  /// "no further splitting found" or a count of the finer blocks.
  std::string residual_note;
  bool all_pass() const;
};

/// Throws std::invalid_argument when the inputs come from different algebras.
ComparisonReport label_and_compare(const HolonomyDecomposition& dec, const OperatorSpan& span,
                                   const SktParameters& skt, const CompactAlgebra& alg);

}  // namespace skt

#endif  // SKT_HOLONOMY_HPP
