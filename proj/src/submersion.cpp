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

#include "skt/submersion.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "skt/errors.hpp"

namespace skt {

namespace {

// Nonzero entries of each column of a matrix.
std::vector<std::vector<std::pair<std::size_t, Scalar>>> sparse_columns(const Matrix& m) {
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> out(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!m(r, c).is_zero()) out[c].emplace_back(r, m(r, c));
  return out;
}

using SparseCols = std::vector<std::vector<std::pair<std::size_t, Scalar>>>;

// T(P1 e_a, P2 e_b, P3 e_c).
Scalar contract(const InvariantForm& t, const SparseCols& p1, const SparseCols& p2, const SparseCols& p3,
                std::size_t a, std::size_t b, std::size_t c) {
  Scalar sum;
  for (const auto& [p, x] : p1[a])
    for (const auto& [q, y] : p2[b])
      for (const auto& [r, z] : p3[c]) sum += x * y * z * t(p, q, r);
  return sum;
}

}  // namespace

bool SplitData::is_vertical(std::size_t i) const {
  return std::binary_search(vertical.begin(), vertical.end(), i);
}

std::string subset_label(const std::vector<std::size_t>& subset) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < subset.size(); ++k) os << (k ? "," : "") << 'a' << subset[k] + 1;
  os << '}';
  return os.str();
}

SplitData build_split_unchecked(const std::vector<std::size_t>& subset, const HermitianStructure&,
                                const CompactAlgebra& alg) {
  const RootSystem& rs = alg.root_system();
  const std::size_t n = alg.dim();
  SplitData s;
  s.subset = subset;
  std::sort(s.subset.begin(), s.subset.end());
  s.subset.erase(std::unique(s.subset.begin(), s.subset.end()), s.subset.end());
  for (std::size_t i : s.subset)
    if (i >= rs.rank()) throw PreconditionError("simple root index " + std::to_string(i + 1) + " out of range");
  s.roots = roots_supported_on(rs, s.subset);
  s.vertical = alg.torus_indices();
  for (std::size_t a : s.roots) {
    s.vertical.push_back(alg.x_index(a));
    s.vertical.push_back(alg.y_index(a));
  }
  std::sort(s.vertical.begin(), s.vertical.end());
  for (std::size_t i = 0; i < n; ++i)
    if (!s.is_vertical(i)) s.horizontal.push_back(i);
  s.vertical_projector = Matrix(n, n);
  s.horizontal_projector = Matrix(n, n);
  for (std::size_t i : s.vertical) s.vertical_projector(i, i) = 1;
  for (std::size_t i : s.horizontal) s.horizontal_projector(i, i) = 1;
  s.bypassed = true;
  return s;
}

SplitData build_split(const SktParameters& skt, const std::vector<std::size_t>& subset, const HermitianStructure& h,
                      const CompactAlgebra& alg) {
  for (std::size_t i : subset) {
    if (std::find(skt.i_max.begin(), skt.i_max.end(), i) == skt.i_max.end()) {
      throw PreconditionError("I = " + subset_label(subset) + " is not contained in I_max = " +
                              subset_label(skt.i_max) + " (a" + std::to_string(i + 1) + " has c != 1)");
    }
  }
  SplitData s = build_split_unchecked(subset, h, alg);
  s.bypassed = false;
  const SplitValidation v = validate_split(s, h, alg);
  if (!v.subalgebra.ok()) throw StructuralError("h_I is not a subalgebra for I = " + subset_label(s.subset));
  if (!v.j_invariance.ok()) throw StructuralError("split is not J-invariant for I = " + subset_label(s.subset));
  if (!v.orthogonality.ok()) throw StructuralError("split is not g-orthogonal for I = " + subset_label(s.subset));
  return s;
}

SplitValidation validate_split(const SplitData& split, const HermitianStructure& h, const CompactAlgebra& alg) {
  SplitValidation v;
  for (std::size_t a = 0; a < split.vertical.size(); ++a)
    for (std::size_t b = a + 1; b < split.vertical.size(); ++b)
      for (const auto& term : alg.bracket(split.vertical[a], split.vertical[b]))
        if (!split.is_vertical(term.index)) v.subalgebra.update(term.coeff, {split.vertical[a], split.vertical[b], term.index});
  for (std::size_t x : split.vertical)
    for (std::size_t y : split.horizontal) {
      v.j_invariance.update(h.j(x, y), {x, y});
      v.j_invariance.update(h.j(y, x), {y, x});
      v.orthogonality.update(h.g(x, y), {x, y});
    }
  return v;
}

Defect torsion_type_check(const InvariantForm& t, const SplitData& split) {
  Defect d;
  for (std::size_t a = 0; a < split.vertical.size(); ++a)
    for (std::size_t b = a + 1; b < split.vertical.size(); ++b)
      for (std::size_t x : split.horizontal)
        d.update(t(split.vertical[a], split.vertical[b], x), {split.vertical[a], split.vertical[b], x});
  return d;
}

Defect one_one_check(const InvariantForm& t, const Matrix& j, const SplitData& split) {
  const SparseCols jc = sparse_columns(j);
  SparseCols id(j.cols());
  for (std::size_t i = 0; i < j.cols(); ++i) id[i].emplace_back(i, Scalar(1));
  Defect d;
  for (std::size_t x : split.vertical)
    for (std::size_t a = 0; a < split.horizontal.size(); ++a)
      for (std::size_t b = a + 1; b < split.horizontal.size(); ++b) {
        const std::size_t y = split.horizontal[a], z = split.horizontal[b];
        d.update(contract(t, id, jc, jc, x, y, z) - t(x, y, z), {x, y, z});
      }
  return d;
}

InvariantForm horizontal_component(const InvariantForm& t, const SplitData& split) {
  const SparseCols ph = sparse_columns(split.horizontal_projector);
  return InvariantForm::from_sorted(t.dim(), 3, [&](std::span<const std::size_t> i) {
    return contract(t, ph, ph, ph, i[0], i[1], i[2]);
  });
}

InvariantForm mixed_component(const InvariantForm& t, const SplitData& split) {
  const SparseCols ph = sparse_columns(split.horizontal_projector);
  const SparseCols pv = sparse_columns(split.vertical_projector);
  return InvariantForm::from_sorted(t.dim(), 3, [&](std::span<const std::size_t> i) {
    return contract(t, ph, ph, pv, i[0], i[1], i[2]) + contract(t, ph, pv, ph, i[0], i[1], i[2]) +
           contract(t, pv, ph, ph, i[0], i[1], i[2]);
  });
}

ObstructionResult projected_torsion_obstruction(const InvariantForm& t, const SplitData& split, const Matrix& g,
                                                const CompactAlgebra& alg) {
  ObstructionResult out;
  if (split.horizontal.size() < 4) return out;
  const InvariantForm dth = exterior_derivative(horizontal_component(t, split), alg);
  const InvariantForm sigma = sigma_t(mixed_component(t, split), g);
  for_each_combination(split.horizontal.size(), 4, [&](std::span<const std::size_t> k) {
    const std::array<std::size_t, 4> x{split.horizontal[k[0]], split.horizontal[k[1]], split.horizontal[k[2]],
                                       split.horizontal[k[3]]};
    const Scalar s = sigma(x);
    out.identity.update(dth(x) + s + s, {x[0], x[1], x[2], x[3]});
    out.obstruction.update(s, {x[0], x[1], x[2], x[3]});
  });
  return out;
}

MixedCurvatureResult mixed_curvature_check(const CurvatureSet& r, const NomizuOperator& lambda, const InvariantForm& t,
                                           const SplitData& split, const Matrix& g, const CompactAlgebra& alg) {
  MixedCurvatureResult out;
  const auto& hz = split.horizontal;
  for (std::size_t a = 0; a < hz.size(); ++a)
    for (std::size_t b = a + 1; b < hz.size(); ++b) {
      const Matrix gr = g * r.upper(hz[a], hz[b]);  // (v, z) = g(R(x,y)z, v)
      for (std::size_t z : split.vertical)
        for (std::size_t v : split.vertical) out.curvature.update(gr(v, z), {hz[a], hz[b], z, v});
    }
  for (std::size_t x : split.vertical) {
    const Matrix gl = g * lambda[x];  // (z, y) = g(Lambda_x y, z)
    for (std::size_t y : hz) {
      Vector gb(alg.dim());
      for (const auto& term : alg.bracket(x, y))
        for (std::size_t z = 0; z < alg.dim(); ++z) gb[z] += term.coeff * g(term.index, z);
      for (std::size_t z : hz) {
        const Scalar tv = t(x, y, z);
        out.connection.update(gl(z, y) - gb[z] - tv, {x, y, z});
        out.connection_literal.update(gl(z, y) - tv, {x, y, z});
      }
    }
  }
  return out;
}

Defect holonomy_split_check(const OperatorSpan& span, const SplitData& split) {
  Defect d = invariance_defect(span, Subspace::coordinate(span.dim, split.vertical));
  d.merge(invariance_defect(span, Subspace::coordinate(span.dim, split.horizontal)));
  return d;
}

bool SubmersionReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

SubmersionReport check_submersion(const SplitData& split, const HermitianStructure& h, const InvariantForm& t,
                                  const NomizuOperator& lambda, const CurvatureSet& r, const OperatorSpan* span,
                                  const CompactAlgebra& alg) {
  SubmersionReport rep;
  rep.subset = split.subset;
  rep.vertical_dim = split.vertical.size();
  rep.horizontal_dim = split.horizontal.size();
  rep.negative_control = split.bypassed;
  auto add = [&](std::string name, Defect d) {
    const bool ok = d.ok();
    rep.checks.push_back({std::move(name), ok, std::move(d)});
  };
  const SplitValidation v = validate_split(split, h, alg);
  add("subalgebra", v.subalgebra);
  add("j_invariant", v.j_invariance);
  add("g_orthogonal", v.orthogonality);
  add("torsion_type", torsion_type_check(t, split));
  add("one_one", one_one_check(t, h.j, split));
  ObstructionResult ob = projected_torsion_obstruction(t, split, h.g, alg);
  add("projected_torsion_identity", ob.identity);
  rep.base_obstruction = ob.obstruction;
  MixedCurvatureResult mc = mixed_curvature_check(r, lambda, t, split, h.g, alg);
  add("mixed_curvature", mc.curvature);
  add("connection_projection", mc.connection);
  rep.connection_literal = mc.connection_literal;
  if (span != nullptr) add("holonomy_invariant", holonomy_split_check(*span, split));
  return rep;
}

}  // namespace skt
