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

#ifndef SKT_HERMITIAN_HPP
#define SKT_HERMITIAN_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "skt/compactform.hpp"
#include "skt/linalg.hpp"

namespace skt {

/// Left-invariant Hermitian data on a compact Lie group: Samelson complex
/// structure J, metric parameters and the resulting metric g and fundamental
/// form omega(X, Y) = g(JX, Y).
struct HermitianStructure {
  Matrix j;
  std::vector<Scalar> lambda;  // per simple factor
  std::vector<Scalar> c;       // per positive root
  Matrix g;
  Matrix omega;
};

/// Samelson J: j_torus on t, J X_a = Y_a and J Y_a = -X_a on every g_a^R.
/// Throws PreconditionError for odd rank or j_torus^2 != -1.
Matrix samelson_j(const CompactAlgebra& alg, const Matrix& j_torus);

/// g = -sum_i lambda_i (B|t_i + sum_{a in factor i} c_a B|g_a^R).
/// Throws PreconditionError naming the offending parameter when one is <= 0.
Matrix build_metric(const CompactAlgebra& alg, std::span<const Scalar> lambda, std::span<const Scalar> c);

struct CompatibilityResult {
  bool compatible = false;
  Scalar max_defect;
  /// First basis pair (i, j) with (J^T g J - g)(i, j) != 0.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Checks J^T g J == g exactly.
CompatibilityResult check_compatibility(const Matrix& g, const Matrix& j);

/// Assembles the structure; does not require compatibility (check it separately).
HermitianStructure make_hermitian(const CompactAlgebra& alg, const Matrix& j_torus, std::vector<Scalar> lambda,
                                  std::vector<Scalar> c);

/// Pluriclosed coefficients generated from the simple-root values.
struct SktParameters {
  std::vector<Scalar> c_simple;        // per simple root
  std::vector<Scalar> c_all;           // per positive root
  std::vector<std::size_t> i_max;      // simple roots with c = 1
  std::vector<std::size_t> delta_i_max;  // positive roots supported on i_max
};

/// c_a = 1 + sum_j k_j (c_{a_j} - 1). Throws PreconditionError naming the
/// first positive root with c_a <= 0, e.g. "c_{a1+a2} = -1/2 <= 0".
SktParameters extend_pluriclosed(const RootSystem& rs, std::span<const Scalar> c_simple);

/// Positive roots whose support lies in `simple_subset`.
std::vector<std::size_t> roots_supported_on(const RootSystem& rs, std::span<const std::size_t> simple_subset);

/// Largest |c_{a+b} - c_a - c_b + 1| over positive a, b with a+b a root, and
/// the first offending pair. Zero iff the coefficients are pluriclosed.
struct PluriclosedRelation {
  Scalar max_defect;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  bool holds() const { return max_defect.is_zero(); }
};
PluriclosedRelation pluriclosed_relation(const RootSystem& rs, std::span<const Scalar> c);

}  // namespace skt

#endif  // SKT_HERMITIAN_HPP
