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

#include "skt/compactform.hpp"

#include <stdexcept>

#include "skt/errors.hpp"

namespace skt {

namespace {

struct Gaussian {
  long re = 0;
  long im = 0;

  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  bool is_zero() const { return re == 0 && im == 0; }
};

// Complex Chevalley basis: h_j at j, E_a at rank + a for signed roots a.
struct ComplexTerm {
  std::size_t index;
  Gaussian coeff;
};

class ComplexBracket {
 public:
  ComplexBracket(const RootSystem& rs, const ChevalleyConstants& cc) : rs_(rs), cc_(cc) {}

  std::vector<ComplexTerm> operator()(std::size_t u, std::size_t v) const {
    const std::size_t r = rs_.rank();
    if (u < r && v < r) return {};
    if (u < r) return scale(root_weight(v - r, u), v);
    if (v < r) return scale(-root_weight(u - r, v), u);
    const SignedRoot a = u - r;
    const SignedRoot b = v - r;
    if (b == negate_root(rs_, a)) {
      const bool positive = a < rs_.num_positive();
      const RootVector alpha = signed_root_vector(rs_, positive ? a : b);
      const RootVector co = rs_.coroot(alpha);
      std::vector<ComplexTerm> out;
      for (std::size_t j = 0; j < r; ++j)
        if (co[j] != 0) out.push_back({j, {positive ? co[j] : -co[j], 0}});
      return out;
    }
    const int n = cc_.n(a, b);
    if (n == 0) return {};
    RootVector sum = signed_root_vector(rs_, a);
    const RootVector vb = signed_root_vector(rs_, b);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += vb[i];
    const auto c = find_signed_root(rs_, sum);
    if (!c) throw StructuralError("structure constant set on a pair whose sum is not a root");
    return {{r + *c, {n, 0}}};
  }

 private:
  int root_weight(SignedRoot a, std::size_t j) const { return rs_.pairing(signed_root_vector(rs_, a), j); }
  static std::vector<ComplexTerm> scale(int w, std::size_t index) {
    if (w == 0) return {};
    return {{index, {w, 0}}};
  }

  const RootSystem& rs_;
  const ChevalleyConstants& cc_;
};

}  // namespace

std::string CompactAlgebra::basis_name(std::size_t i) const {
  const auto& l = labels_[i];
  switch (l.kind) {
    case BasisKind::Torus: return "T" + std::to_string(l.index + 1);
    case BasisKind::XRoot: return "X[" + roots_.root_label(roots_.positive_root(l.index)) + "]";
    case BasisKind::YRoot: return "Y[" + roots_.root_label(roots_.positive_root(l.index)) + "]";
  }
  return {};
}

std::size_t CompactAlgebra::factor_of_basis(std::size_t i) const {
  const auto& l = labels_[i];
  return l.kind == BasisKind::Torus ? roots_.factor_of_simple(l.index) : roots_.factor_of_root(l.index);
}

Scalar CompactAlgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& t : bracket(i, j))
    if (t.index == k) return t.coeff;
  return {};
}

Vector CompactAlgebra::bracket(std::span<const Scalar> x, std::span<const Scalar> y) const {
  Vector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (const auto& t : bracket(i, j)) out[t.index] += xy * t.coeff;
    }
  }
  return out;
}

Matrix CompactAlgebra::ad(std::size_t i) const {
  Matrix m(dim(), dim());
  for (std::size_t k = 0; k < dim(); ++k)
    for (const auto& t : bracket(i, k)) m(t.index, k) = t.coeff;
  return m;
}

std::vector<std::size_t> CompactAlgebra::torus_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < rank(); ++j) out.push_back(torus_index(j));
  return out;
}

std::vector<std::size_t> CompactAlgebra::factor_indices(std::size_t factor) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (factor_of_basis(i) == factor) out.push_back(i);
  return out;
}

CompactAlgebra build_compact_algebra(const RootSystem& rs, const ChevalleyConstants& cc) {
  if (cc.num_positive() != rs.num_positive())
    throw StructuralError("structure constants were built for a root system with " +
                          std::to_string(cc.num_positive()) + " positive roots, expected " +
                          std::to_string(rs.num_positive()));
  CompactAlgebra alg;
  alg.roots_ = rs;
  alg.constants_ = cc;
  const std::size_t r = rs.rank();
  const std::size_t p = rs.num_positive();
  for (std::size_t j = 0; j < r; ++j) alg.labels_.push_back({BasisKind::Torus, j});
  for (std::size_t a = 0; a < p; ++a) {
    alg.labels_.push_back({BasisKind::XRoot, a});
    alg.labels_.push_back({BasisKind::YRoot, a});
  }
  const std::size_t n = alg.labels_.size();
  const std::size_t complex_dim = r + 2 * p;

  // Compact basis vectors in the complex Chevalley basis.
  std::vector<std::vector<ComplexTerm>> embed(n);
  for (std::size_t j = 0; j < r; ++j) embed[j] = {{j, {0, 1}}};
  for (std::size_t a = 0; a < p; ++a) {
    embed[alg.x_index(a)] = {{r + a, {1, 0}}, {r + a + p, {-1, 0}}};
    embed[alg.y_index(a)] = {{r + a, {0, 1}}, {r + a + p, {0, 1}}};
  }

  const ComplexBracket complex_bracket(rs, cc);
  alg.brackets_.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Gaussian> acc(complex_dim);
      for (const auto& u : embed[i])
        for (const auto& v : embed[j])
          for (const auto& w : complex_bracket(u.index, v.index)) acc[w.index] += u.coeff * v.coeff * w.coeff;

      auto fail = [&] {
        throw StructuralError("bracket [" + alg.basis_name(i) + ", " + alg.basis_name(j) +
                              "] is not real in the compact basis");
      };
      auto& out = alg.brackets_[i * n + j];
      for (std::size_t k = 0; k < r; ++k) {
        // z h_k = (-i z) T_k
        const Gaussian z = acc[k];
        if (z.re != 0) fail();
        if (z.im != 0) out.push_back({k, Scalar(z.im)});
      }
      for (std::size_t a = 0; a < p; ++a) {
        // u E_a + v E_{-a} = (u - v)/2 X_a + (u + v)/(2i) Y_a
        const Gaussian u = acc[r + a];
        const Gaussian v = acc[r + a + p];
        const Gaussian x{u.re - v.re, u.im - v.im};
        const Gaussian y{u.im + v.im, -(u.re + v.re)};
        if (x.im != 0 || y.im != 0) fail();
        if (x.re != 0) out.push_back({alg.x_index(a), Scalar(mpq_class(x.re, 2))});
        if (y.re != 0) out.push_back({alg.y_index(a), Scalar(mpq_class(y.re, 2))});
      }
    }
  }

  // Killing form as the trace of ad(e_i) ad(e_j).
  alg.killing_ = Matrix(n, n);
  std::vector<Matrix> ads;
  ads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ads.push_back(alg.ad(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Scalar trace;
      for (std::size_t k = 0; k < n; ++k)
        for (const auto& t : alg.bracket(i, k)) {
          const Scalar& back = ads[j](k, t.index);
          if (!back.is_zero()) trace += t.coeff * back;
        }
      alg.killing_(i, j) = trace;
      alg.killing_(j, i) = trace;
    }
  }
  return alg;
}

Matrix killing_restriction(const CompactAlgebra& alg, std::span<const std::size_t> indices) {
  for (std::size_t i : indices)
    if (i >= alg.dim()) throw std::out_of_range("killing_restriction: basis index " + std::to_string(i) + " out of range");
  return alg.killing().restrict(indices, indices);
}

}  // namespace skt
