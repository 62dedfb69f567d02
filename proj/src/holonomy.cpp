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

#include "skt/holonomy.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace skt {

namespace {

Vector apply(const Matrix& a, const Vector& v) { return a * v; }

std::vector<Vector> basis_vectors(const Subspace& s) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < s.dimension(); ++i) out.push_back(s.vector(i));
  return out;
}

RowSpace row_space_of(const Subspace& s) {
  RowSpace rows(s.ambient());
  for (std::size_t i = 0; i < s.dimension(); ++i) rows.insert(s.vector(i));
  return rows;
}

std::vector<std::size_t> root_block_union(const CompactAlgebra& alg, const std::vector<std::size_t>& roots) {
  std::vector<std::size_t> idx;
  for (std::size_t a : roots) {
    idx.push_back(alg.x_index(a));
    idx.push_back(alg.y_index(a));
  }
  std::sort(idx.begin(), idx.end());
  return idx;
}

Subspace common_kernel(const OperatorSpan& span) {
  RowSpace rows(span.dim);
  for (const auto& a : span.basis)
    for (std::size_t r = 0; r < span.dim; ++r) rows.insert(a.row(r));
  Matrix stacked(rows.dimension(), span.dim);
  for (std::size_t r = 0; r < rows.dimension(); ++r)
    for (std::size_t c = 0; c < span.dim; ++c) stacked(r, c) = rows.rows()[r][c];
  const Matrix ns = null_space(stacked);
  std::vector<Vector> vecs;
  for (std::size_t c = 0; c < ns.cols(); ++c) vecs.push_back(ns.column(c));
  return Subspace::span(span.dim, vecs);
}

// Labels a block by comparing it with coordinate subspaces of g.
void classify(HolonomyBlock& block, const CompactAlgebra& alg) {
  const std::size_t n = alg.dim();
  const auto torus = alg.torus_indices();
  if (block.space == Subspace::coordinate(n, torus)) {
    block.kind = BlockKind::Torus;
    return;
  }
  const RootSystem& rs = alg.root_system();
  for (std::size_t a = 0; a < rs.num_positive(); ++a) {
    if (block.space == Subspace::coordinate(n, alg.root_block_indices(a))) {
      block.kind = BlockKind::RootSpace;
      block.tag = a;
      return;
    }
  }
  // A sum of whole root spaces inside one simple factor.
  std::vector<std::size_t> roots;
  for (std::size_t a = 0; a < rs.num_positive(); ++a)
    if (block.space.contains(Subspace::coordinate(n, alg.root_block_indices(a)))) roots.push_back(a);
  if (!roots.empty()) {
    const std::size_t f = rs.factor_of_root(roots.front());
    const bool one_factor =
        std::all_of(roots.begin(), roots.end(), [&](std::size_t a) { return rs.factor_of_root(a) == f; });
    if (one_factor && block.space == Subspace::coordinate(n, root_block_union(alg, roots))) {
      block.kind = BlockKind::Residual;
      block.tag = f;
      return;
    }
  }
  block.kind = block.trivial ? BlockKind::Trivial : BlockKind::Mixed;
}

}  // namespace

OperatorSpan generate_span(const NomizuOperator& lambda, const CurvatureSet& r, const CompactAlgebra& alg) {
  const std::size_t n = alg.dim();
  OperatorSpan span;
  span.dim = n;
  RowSpace rows(n * n);
  std::vector<std::size_t> frontier;
  for (const auto& m : r.all_upper()) {
    if (rows.insert(m.data())) {
      frontier.push_back(span.basis.size());
      span.basis.push_back(m);
    }
  }
  span.generation_log.push_back(span.basis.size());
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier)
      for (std::size_t k = 0; k < n; ++k) {
        Matrix prod = lambda[k] * span.basis[idx];
        if (prod.is_zero()) continue;
        if (rows.insert(prod.data())) {
          next.push_back(span.basis.size());
          span.basis.push_back(std::move(prod));
        }
      }
    span.generation_log.push_back(span.basis.size());
    frontier = std::move(next);
  }
  return span;
}

std::string block_label(const HolonomyBlock& block, const CompactAlgebra& alg) {
  const RootSystem& rs = alg.root_system();
  switch (block.kind) {
    case BlockKind::Torus: return "Torus";
    case BlockKind::RootSpace: return "RootSpace(" + rs.root_label(rs.positive_root(*block.tag)) + ")";
    case BlockKind::Residual: return "Residual(" + rs.factors()[*block.tag].name() + ")";
    case BlockKind::Trivial: return "Trivial";
    case BlockKind::Mixed: return "Mixed";
    case BlockKind::TrivialWhole: return "TrivialWhole";
  }
  return "Unknown";
}

HolonomyDecomposition invariant_decomposition(const OperatorSpan& span, const Matrix& g, const CompactAlgebra& alg) {
  const std::size_t n = alg.dim();
  if (span.dim != n || g.rows() != n) throw std::invalid_argument("span, metric and algebra dimensions differ");
  HolonomyDecomposition dec;
  dec.trivial_part = common_kernel(span);

  if (span.dimension() == 0) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    dec.blocks.push_back({Subspace::coordinate(n, all), BlockKind::TrivialWhole, std::nullopt, true});
    return dec;
  }

  Subspace covered(n);
  auto emit = [&](HolonomyBlock block) {
    covered = covered + block.space;
    dec.blocks.push_back(std::move(block));
  };

  // Trivial part, in canonical pieces.
  const Subspace torus = Subspace::coordinate(n, alg.torus_indices());
  if (dec.trivial_part.contains(torus)) emit({torus, BlockKind::Torus, std::nullopt, true});
  for (std::size_t a = 0; a < alg.root_system().num_positive(); ++a) {
    const Subspace root = Subspace::coordinate(n, alg.root_block_indices(a));
    if (dec.trivial_part.contains(root)) emit({root, BlockKind::RootSpace, a, true});
  }
  if (covered.dimension() < dec.trivial_part.dimension()) {
    std::vector<Vector> rest;
    for (const auto& v : basis_vectors(dec.trivial_part)) {
      Vector p = orthogonal_projection(v, covered, g);
      for (std::size_t i = 0; i < n; ++i) p[i] = v[i] - p[i];
      rest.push_back(std::move(p));
    }
    HolonomyBlock block{Subspace::span(n, rest), BlockKind::Trivial, std::nullopt, true};
    classify(block, alg);
    emit(std::move(block));
  }

  // Orbit blocks in the g-orthocomplement of what is covered.
  for (std::size_t i = 0; i < n && covered.dimension() < n; ++i) {
    Vector e(n);
    e[i] = 1;
    if (covered.contains(e)) continue;
    Vector seed = orthogonal_projection(e, covered, g);
    for (std::size_t k = 0; k < n; ++k) seed[k] = e[k] - seed[k];

    RowSpace orbit(n);
    std::vector<Vector> vecs;
    std::deque<Vector> queue;
    orbit.insert(seed);
    vecs.push_back(seed);
    queue.push_back(seed);
    while (!queue.empty()) {
      const Vector w = std::move(queue.front());
      queue.pop_front();
      for (const auto& a : span.basis) {
        Vector u = apply(a, w);
        if (orbit.insert(u)) {
          vecs.push_back(u);
          queue.push_back(std::move(u));
        }
      }
    }
    HolonomyBlock block{Subspace::span(n, vecs), BlockKind::Mixed, std::nullopt, false};
    classify(block, alg);
    emit(std::move(block));
  }
  return dec;
}

Defect invariance_defect(const OperatorSpan& span, const Subspace& w) {
  Defect d;
  const RowSpace rows = row_space_of(w);
  for (std::size_t a = 0; a < span.basis.size(); ++a)
    for (std::size_t b = 0; b < w.dimension(); ++b) {
      const Vector res = rows.reduce(span.basis[a] * w.vector(b));
      for (std::size_t c = 0; c < res.size(); ++c) d.update(res[c], {a, b, c});
    }
  return d;
}

DecompositionVerification verify_decomposition(const HolonomyDecomposition& dec, const OperatorSpan& span,
                                               const Matrix& g) {
  DecompositionVerification v;
  Subspace total(span.dim);
  std::size_t dims = 0;
  for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
    const Subspace& w = dec.blocks[i].space;
    v.invariance.merge(invariance_defect(span, w));
    v.complement_invariance.merge(invariance_defect(span, orthogonal_complement(w, g)));
    total = total + w;
    dims += w.dimension();
    for (std::size_t j = i + 1; j < dec.blocks.size(); ++j) {
      const Matrix cross = w.basis().transpose() * g * dec.blocks[j].space.basis();
      for (std::size_t a = 0; a < cross.rows(); ++a)
        for (std::size_t b = 0; b < cross.cols(); ++b) v.orthogonality.update(cross(a, b), {i, j, a, b});
    }
  }
  v.spans_algebra = total.dimension() == span.dim && dims == span.dim;
  return v;
}

bool ComparisonReport::all_pass() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const ClauseResult& c) { return c.pass; });
}

ComparisonReport label_and_compare(const HolonomyDecomposition& dec, const OperatorSpan& span,
                                   const SktParameters& skt, const CompactAlgebra& alg) {
  const std::size_t n = alg.dim();
  const RootSystem& rs = alg.root_system();
  if (span.dim != n || dec.trivial_part.ambient() != n || skt.c_all.size() != rs.num_positive() ||
      skt.c_simple.size() != rs.rank()) {
    throw std::invalid_argument("decomposition, span and parameters do not belong to the same algebra");
  }
  ComparisonReport report;

  {
    ClauseResult c{"torus_trivial", false, {}, ""};
    const auto torus = alg.torus_indices();
    for (std::size_t a = 0; a < span.basis.size(); ++a)
      for (std::size_t t : torus)
        for (std::size_t r = 0; r < n; ++r) c.defect.update(span.basis[a](r, t), {a, t, r});
    c.pass = c.defect.ok() && dec.trivial_part.contains(Subspace::coordinate(n, torus));
    c.detail = c.pass ? "every operator annihilates t" : "an operator acts nontrivially on t";
    report.clauses.push_back(std::move(c));
  }
  {
    ClauseResult c{"imax_root_spaces_invariant", false, {}, ""};
    for (std::size_t a : skt.delta_i_max) {
      Defect d = invariance_defect(span, Subspace::coordinate(n, alg.root_block_indices(a)));
      if (!d.ok() && c.detail.empty()) c.detail = "g_" + rs.root_label(rs.positive_root(a)) + " is not invariant";
      c.defect.merge(d);
    }
    c.pass = c.defect.ok();
    if (c.pass) c.detail = std::to_string(skt.delta_i_max.size()) + " root spaces invariant";
    report.clauses.push_back(std::move(c));
  }
  std::vector<std::size_t> residual_roots;
  for (std::size_t a = 0; a < rs.num_positive(); ++a)
    if (std::find(skt.delta_i_max.begin(), skt.delta_i_max.end(), a) == skt.delta_i_max.end())
      residual_roots.push_back(a);
  const Subspace residual = Subspace::coordinate(n, root_block_union(alg, residual_roots));
  {
    ClauseResult c{"residual_sum_invariant", false, invariance_defect(span, residual), ""};
    c.pass = c.defect.ok();
    c.detail = "dimension " + std::to_string(residual.dimension());
    report.clauses.push_back(std::move(c));
  }
  {
    ClauseResult c{"simple_factors_invariant", false, {}, ""};
    for (std::size_t f = 0; f < rs.factors().size(); ++f) {
      Defect d = invariance_defect(span, Subspace::coordinate(n, alg.factor_indices(f)));
      if (!d.ok() && c.detail.empty()) c.detail = "factor " + rs.factors()[f].name() + " is not invariant";
      c.defect.merge(d);
    }
    c.pass = c.defect.ok();
    if (c.pass) c.detail = std::to_string(rs.factors().size()) + " factors invariant";
    report.clauses.push_back(std::move(c));
  }

  for (const auto& b : dec.blocks)
    if (!b.trivial && b.space.dimension() > 0 && residual.contains(b.space)) ++report.residual_blocks_found;
  if (residual.dimension() == 0) {
    report.residual_note = "empty residual";
  } else if (report.residual_blocks_found == 1) {
    report.residual_note = "no further splitting found";
  } else {
    report.residual_note = "residual splits into " + std::to_string(report.residual_blocks_found) + " blocks";
  }
  return report;
}

}  // namespace skt
