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

#include "skt/hermitian.hpp"

#include <algorithm>

#include "skt/errors.hpp"

namespace skt {

Matrix samelson_j(const CompactAlgebra& alg, const Matrix& j_torus) {
  const std::size_t r = alg.rank();
  if (r % 2 != 0) throw PreconditionError("odd rank " + std::to_string(r) + ": the torus carries no complex structure");
  if (j_torus.rows() != r || j_torus.cols() != r)
    throw PreconditionError("j_torus must be " + std::to_string(r) + "x" + std::to_string(r));
  if (!(j_torus * j_torus + Matrix::identity(r)).is_zero()) throw PreconditionError("j_torus^2 != -1");
  Matrix j(alg.dim(), alg.dim());
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) j(alg.torus_index(a), alg.torus_index(b)) = j_torus(a, b);
  for (std::size_t k = 0; k < alg.root_system().num_positive(); ++k) {
    j(alg.y_index(k), alg.x_index(k)) = 1;
    j(alg.x_index(k), alg.y_index(k)) = -1;
  }
  return j;
}

Matrix build_metric(const CompactAlgebra& alg, std::span<const Scalar> lambda, std::span<const Scalar> c) {
  const RootSystem& rs = alg.root_system();
  if (lambda.size() != rs.factors().size())
    throw PreconditionError("expected " + std::to_string(rs.factors().size()) + " lambda values, got " +
                            std::to_string(lambda.size()));
  if (c.size() != rs.num_positive())
    throw PreconditionError("expected " + std::to_string(rs.num_positive()) + " root coefficients, got " +
                            std::to_string(c.size()));
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i].sign() <= 0)
      throw PreconditionError("lambda_" + std::to_string(i + 1) + " = " + lambda[i].to_string() + " <= 0");
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k].sign() <= 0)
      throw PreconditionError("c_{" + rs.root_label(rs.positive_root(k)) + "} = " + c[k].to_string() + " <= 0");

  const Matrix& b = alg.killing();
  Matrix g(alg.dim(), alg.dim());
  const auto torus = alg.torus_indices();
  for (std::size_t a : torus)
    for (std::size_t bb : torus) {
      if (alg.factor_of_basis(a) != alg.factor_of_basis(bb) || b(a, bb).is_zero()) continue;
      g(a, bb) = -lambda[alg.factor_of_basis(a)] * b(a, bb);
    }
  for (std::size_t k = 0; k < rs.num_positive(); ++k) {
    const Scalar scale = -lambda[rs.factor_of_root(k)] * c[k];
    for (std::size_t u : alg.root_block_indices(k))
      for (std::size_t v : alg.root_block_indices(k))
        if (!b(u, v).is_zero()) g(u, v) = scale * b(u, v);
  }
  return g;
}

CompatibilityResult check_compatibility(const Matrix& g, const Matrix& j) {
  CompatibilityResult out;
  const Matrix defect = j.transpose() * g * j - g;
  out.max_defect = max_abs(defect);
  out.compatible = out.max_defect.is_zero();
  for (std::size_t r = 0; r < defect.rows() && !out.witness; ++r)
    for (std::size_t c = 0; c < defect.cols(); ++c)
      if (!defect(r, c).is_zero()) {
        out.witness = std::make_pair(r, c);
        break;
      }
  return out;
}

HermitianStructure make_hermitian(const CompactAlgebra& alg, const Matrix& j_torus, std::vector<Scalar> lambda,
                                  std::vector<Scalar> c) {
  HermitianStructure h;
  h.j = samelson_j(alg, j_torus);
  h.g = build_metric(alg, lambda, c);
  h.lambda = std::move(lambda);
  h.c = std::move(c);
  h.omega = h.j.transpose() * h.g;
  return h;
}

std::vector<std::size_t> roots_supported_on(const RootSystem& rs, std::span<const std::size_t> simple_subset) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < rs.num_positive(); ++k) {
    const auto& v = rs.positive_root(k);
    bool inside = true;
    for (std::size_t i = 0; i < v.size() && inside; ++i)
      if (v[i] != 0 && std::find(simple_subset.begin(), simple_subset.end(), i) == simple_subset.end()) inside = false;
    if (inside) out.push_back(k);
  }
  return out;
}

SktParameters extend_pluriclosed(const RootSystem& rs, std::span<const Scalar> c_simple) {
  if (c_simple.size() != rs.rank())
    throw PreconditionError("expected " + std::to_string(rs.rank()) + " simple-root coefficients, got " +
                            std::to_string(c_simple.size()));
  SktParameters out;
  out.c_simple.assign(c_simple.begin(), c_simple.end());
  for (std::size_t k = 0; k < rs.num_positive(); ++k) {
    const auto& v = rs.positive_root(k);
    Scalar c = 1;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) c += Scalar(v[j]) * (c_simple[j] - Scalar(1));
    if (c.sign() <= 0)
      throw PreconditionError("c_{" + rs.root_label(v) + "} = " + c.to_string() + " <= 0");
    out.c_all.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < rs.rank(); ++i)
    if (c_simple[i] == Scalar(1)) out.i_max.push_back(i);
  out.delta_i_max = roots_supported_on(rs, out.i_max);
  return out;
}

PluriclosedRelation pluriclosed_relation(const RootSystem& rs, std::span<const Scalar> c) {
  PluriclosedRelation out;
  const std::size_t p = rs.num_positive();
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = a; b < p; ++b) {
      RootVector sum = rs.positive_root(a);
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += rs.positive_root(b)[i];
      const auto s = rs.find_positive(sum);
      if (!s) continue;
      const Scalar defect = (c[*s] - c[a] - c[b] + Scalar(1)).abs();
      if (defect > out.max_defect) {
        if (out.max_defect.is_zero()) out.witness = std::make_pair(a, b);
        out.max_defect = defect;
      }
    }
  }
  return out;
}

}  // namespace skt
