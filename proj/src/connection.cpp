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

#include "skt/connection.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "skt/errors.hpp"

namespace skt {

namespace {

// Dense n^3 table, index (a*n + b)*n + c.
struct Dense3 {
  std::size_t n = 0;
  std::vector<Scalar> v;
  explicit Dense3(std::size_t dim) : n(dim), v(dim * dim * dim) {}
  Scalar& operator()(std::size_t a, std::size_t b, std::size_t c) { return v[(a * n + b) * n + c]; }
  const Scalar& operator()(std::size_t a, std::size_t b, std::size_t c) const { return v[(a * n + b) * n + c]; }
};

Dense3 dense(const InvariantForm& t) {
  const std::size_t n = t.dim();
  Dense3 out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        const Scalar& x = t(a, b, c);
        if (x.is_zero()) continue;
        out(a, b, c) = x;
        out(b, c, a) = x;
        out(c, a, b) = x;
        out(b, a, c) = -x;
        out(a, c, b) = -x;
        out(c, b, a) = -x;
      }
  return out;
}

// g([e_a, e_b], e_c).
Dense3 g_bracket(const CompactAlgebra& alg, const Matrix& g) {
  const std::size_t n = alg.dim();
  Dense3 out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (const auto& term : alg.bracket(a, b))
        for (std::size_t c = 0; c < n; ++c) {
          const Scalar& gc = g(term.index, c);
          if (gc.is_zero()) continue;
          Scalar x = term.coeff * gc;
          out(a, b, c) += x;
          out(b, a, c) -= x;
        }
  return out;
}

// g([J e_a, J e_b], e_c).
Dense3 gj_bracket(const CompactAlgebra& alg, const Matrix& g, const Matrix& j) {
  const std::size_t n = alg.dim();
  std::vector<Vector> jcol(n);
  for (std::size_t a = 0; a < n; ++a) jcol[a] = j.column(a);
  Dense3 out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vector br = alg.bracket(jcol[a], jcol[b]);
      if (is_zero(br)) continue;
      const Vector gbr = g.transpose() * br;
      for (std::size_t c = 0; c < n; ++c) {
        out(a, b, c) = gbr[c];
        out(b, a, c) = -gbr[c];
      }
    }
  return out;
}

Matrix ginverse(const Matrix& g) {
  auto inv = inverse(g);
  if (!inv) throw PreconditionError("metric is degenerate");
  return *std::move(inv);
}

// Lambda_x = g^{-1} M_x with M_x(z, y) = L(x, y, z).
NomizuOperator from_lowered(const Dense3& l, const Matrix& ginv) {
  const std::size_t n = l.n;
  std::vector<Matrix> ops;
  ops.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    Matrix m(n, n);
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) m(z, y) = l(x, y, z);
    ops.push_back(ginv * m);
  }
  return NomizuOperator(std::move(ops));
}

// Sorts a small index array in place; returns the permutation sign, 0 on repeats.
int sort_with_sign(std::size_t* idx, std::size_t k) {
  int sign = 1;
  for (std::size_t a = 1; a < k; ++a)
    for (std::size_t b = a; b > 0 && idx[b - 1] >= idx[b]; --b) {
      if (idx[b - 1] == idx[b]) return 0;
      std::swap(idx[b - 1], idx[b]);
      sign = -sign;
    }
  for (std::size_t a = 1; a < k; ++a)
    if (idx[a - 1] == idx[a]) return 0;
  return sign;
}

constexpr std::size_t kMaxDegree = 16;

}  // namespace

void for_each_combination(std::size_t n, std::size_t k, const std::function<void(std::span<const std::size_t>)>& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t a = 0; a < k; ++a) idx[a] = a;
  while (true) {
    f(idx);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t a = pos; a < k; ++a) idx[a] = idx[a - 1] + 1;
  }
}

InvariantForm::InvariantForm(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {
  if (degree > kMaxDegree) throw std::invalid_argument("form degree " + std::to_string(degree) + " is too large");
  binom_.assign(dim + 1, std::vector<std::size_t>(degree + 1, 0));
  for (std::size_t a = 0; a <= dim; ++a) {
    binom_[a][0] = 1;
    for (std::size_t b = 1; b <= degree && b <= a; ++b)
      binom_[a][b] = binom_[a - 1][b - 1] + (b <= a - 1 ? binom_[a - 1][b] : 0);
  }
  coeffs_.assign(degree <= dim ? binom_[dim][degree] : 0, Scalar());
}

InvariantForm InvariantForm::from_sorted(std::size_t dim, std::size_t degree,
                                         const std::function<Scalar(std::span<const std::size_t>)>& value) {
  InvariantForm out(dim, degree);
  for_each_combination(dim, degree, [&](std::span<const std::size_t> idx) { out.set_sorted(idx, value(idx)); });
  return out;
}

std::size_t InvariantForm::rank_of_sorted(std::span<const std::size_t> idx) const {
  std::size_t r = 0;
  for (std::size_t m = 0; m < idx.size(); ++m) r += binom_[idx[m]][m + 1];
  return r;
}

Scalar InvariantForm::operator()(std::span<const std::size_t> idx) const {
  if (idx.size() != degree_) throw std::invalid_argument("form evaluated on the wrong number of arguments");
  std::array<std::size_t, kMaxDegree> buf{};
  std::copy(idx.begin(), idx.end(), buf.begin());
  const int sign = sort_with_sign(buf.data(), degree_);
  if (sign == 0) return Scalar();
  const Scalar& v = coeffs_[rank_of_sorted(std::span<const std::size_t>(buf.data(), degree_))];
  return sign > 0 ? v : -v;
}

Scalar InvariantForm::operator()(std::size_t i, std::size_t j) const {
  const std::array<std::size_t, 2> idx{i, j};
  return (*this)(idx);
}

Scalar InvariantForm::operator()(std::size_t i, std::size_t j, std::size_t k) const {
  const std::array<std::size_t, 3> idx{i, j, k};
  return (*this)(idx);
}

Scalar InvariantForm::contract_first(std::span<const Scalar> v, std::span<const std::size_t> rest) const {
  std::array<std::size_t, kMaxDegree> buf{};
  std::copy(rest.begin(), rest.end(), buf.begin() + 1);
  Scalar out;
  for (std::size_t a = 0; a < v.size(); ++a) {
    if (v[a].is_zero()) continue;
    buf[0] = a;
    out += v[a] * (*this)(std::span<const std::size_t>(buf.data(), degree_));
  }
  return out;
}

void InvariantForm::set_sorted(std::span<const std::size_t> idx, Scalar value) {
  coeffs_[rank_of_sorted(idx)] = std::move(value);
}

Defect InvariantForm::difference(const InvariantForm& other) const {
  if (other.dim_ != dim_ || other.degree_ != degree_) throw std::invalid_argument("forms of different shape");
  Defect d;
  for_each_combination(dim_, degree_, [&](std::span<const std::size_t> idx) {
    const std::size_t r = rank_of_sorted(idx);
    const Scalar diff = coeffs_[r] - other.coeffs_[r];
    if (!diff.is_zero() && d.witness.empty()) d.witness.assign(idx.begin(), idx.end());
    if (!diff.is_zero() && diff.abs() > d.max) d.max = diff.abs();
  });
  return d;
}

InvariantForm fundamental_form(const Matrix& g, const Matrix& j) {
  const auto compat = check_compatibility(g, j);
  if (!compat.compatible) {
    throw PreconditionError("metric is not J-compatible at (" + std::to_string(compat.witness->first) + ", " +
                            std::to_string(compat.witness->second) + ")");
  }
  const Matrix omega = j.transpose() * g;
  return InvariantForm::from_sorted(g.rows(), 2, [&](std::span<const std::size_t> idx) {
    return omega(idx[0], idx[1]);
  });
}

InvariantForm bismut_torsion(const HermitianStructure& h, const CompactAlgebra& alg) {
  const Dense3 gj = gj_bracket(alg, h.g, h.j);
  return InvariantForm::from_sorted(alg.dim(), 3, [&](std::span<const std::size_t> i) {
    return -(gj(i[0], i[1], i[2]) + gj(i[1], i[2], i[0]) + gj(i[2], i[0], i[1]));
  });
}

InvariantForm exterior_derivative(const InvariantForm& form, const CompactAlgebra& alg) {
  const std::size_t k = form.degree();
  if (form.dim() != alg.dim()) throw std::invalid_argument("form and algebra dimensions differ");
  if (k + 1 > alg.dim()) {
    throw std::invalid_argument("cannot differentiate a " + std::to_string(k) + "-form on a " +
                                std::to_string(alg.dim()) + "-dimensional algebra");
  }
  std::vector<std::size_t> args(k);
  return InvariantForm::from_sorted(alg.dim(), k + 1, [&](std::span<const std::size_t> x) {
    Scalar sum;
    for (std::size_t a = 0; a < x.size(); ++a)
      for (std::size_t b = a + 1; b < x.size(); ++b) {
        const auto& br = alg.bracket(x[a], x[b]);
        if (br.empty()) continue;
        std::size_t pos = 1;
        for (std::size_t m = 0; m < x.size(); ++m)
          if (m != a && m != b) args[pos++] = x[m];
        Scalar inner;
        for (const auto& term : br) {
          args[0] = term.index;
          inner += term.coeff * form(args);
        }
        if ((a + b) % 2 == 0) sum += inner; else sum -= inner;
      }
    return sum;
  });
}

InvariantForm minus_dc(const InvariantForm& omega, const Matrix& j, const CompactAlgebra& alg) {
  const InvariantForm d = exterior_derivative(omega, alg);
  const std::size_t n = alg.dim();
  const Dense3 dd = dense(d);
  std::vector<std::vector<std::size_t>> nz(n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r)
      if (!j(r, c).is_zero()) nz[c].push_back(r);
  return InvariantForm::from_sorted(n, 3, [&](std::span<const std::size_t> x) {
    Scalar sum;
    for (std::size_t a : nz[x[0]])
      for (std::size_t b : nz[x[1]])
        for (std::size_t c : nz[x[2]]) {
          const Scalar& v = dd(a, b, c);
          if (v.is_zero()) continue;
          sum += j(a, x[0]) * j(b, x[1]) * j(c, x[2]) * v;
        }
    return sum;
  });
}

NomizuOperator nomizu(const Matrix& g, const InvariantForm& t, const CompactAlgebra& alg) {
  const std::size_t n = alg.dim();
  const Dense3 gb = g_bracket(alg, g);
  const Dense3 td = dense(t);
  const Scalar half = Scalar(mpq_class(1, 2));
  Dense3 l(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Scalar s = gb(x, y, z) + gb(z, x, y) - gb(y, z, x) + td(x, y, z);
        if (!s.is_zero()) l(x, y, z) = s * half;
      }
  return from_lowered(l, ginverse(g));
}

NomizuOperator nomizu_from_complex_structure(const HermitianStructure& h, const CompactAlgebra& alg) {
  const std::size_t n = alg.dim();
  const Dense3 gb = g_bracket(alg, h.g);
  const Dense3 gj = gj_bracket(alg, h.g, h.j);
  const Scalar half = Scalar(mpq_class(1, 2));
  Dense3 l(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Scalar s = gb(x, y, z) + gb(z, x, y) - gb(y, z, x) - gj(x, y, z) - gj(z, x, y) - gj(y, z, x);
        if (!s.is_zero()) l(x, y, z) = s * half;
      }
  return from_lowered(l, ginverse(h.g));
}

Defect nomizu_metric_defect(const NomizuOperator& lambda, const Matrix& g) {
  Defect d;
  for (std::size_t x = 0; x < lambda.dim(); ++x) {
    const Matrix gl = g * lambda[x];  // gl(z, y) = g(e_z, Lambda_x e_y)
    for (std::size_t y = 0; y < gl.rows(); ++y)
      for (std::size_t z = y; z < gl.cols(); ++z) d.update(gl(z, y) + gl(y, z), {x, y, z});
  }
  return d;
}

Defect nomizu_torsion_defect(const NomizuOperator& lambda, const InvariantForm& t, const Matrix& g,
                             const CompactAlgebra& alg) {
  const std::size_t n = alg.dim();
  const Matrix ginv = ginverse(g);
  Defect d;
  Vector tv(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      for (std::size_t w = 0; w < n; ++w) tv[w] = t(x, y, w);
      Vector res = ginv * tv;
      for (auto& v : res) v = -v;
      for (std::size_t w = 0; w < n; ++w) res[w] += lambda[x](w, y) - lambda[y](w, x);
      for (const auto& term : alg.bracket(x, y)) res[term.index] -= term.coeff;
      for (std::size_t w = 0; w < n; ++w) d.update(res[w], {x, y, w});
    }
  return d;
}

Defect nomizu_hermitian_defect(const NomizuOperator& lambda, const Matrix& j) {
  Defect d;
  for (std::size_t x = 0; x < lambda.dim(); ++x) {
    const Matrix c = commutator(lambda[x], j);
    for (std::size_t r = 0; r < c.rows(); ++r)
      for (std::size_t s = 0; s < c.cols(); ++s) d.update(c(r, s), {x, r, s});
  }
  return d;
}

Defect nomizu_difference(const NomizuOperator& a, const NomizuOperator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("Nomizu operators of different dimension");
  Defect d;
  for (std::size_t x = 0; x < a.dim(); ++x)
    for (std::size_t r = 0; r < a[x].rows(); ++r)
      for (std::size_t s = 0; s < a[x].cols(); ++s) d.update(a[x](r, s) - b[x](r, s), {x, r, s});
  return d;
}

CurvatureSet::CurvatureSet(std::size_t dim, std::vector<Matrix> upper) : dim_(dim), upper_(std::move(upper)) {
  if (upper_.size() != dim * (dim - (dim > 0 ? 1 : 0)) / 2)
    throw std::invalid_argument("curvature set has the wrong number of pairs");
}

std::size_t CurvatureSet::pair_index(std::size_t i, std::size_t j) const {
  if (i >= j || j >= dim_) throw std::out_of_range("curvature pair index");
  return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
}

Matrix CurvatureSet::operator()(std::size_t i, std::size_t j) const {
  if (i == j) return Matrix(dim_, dim_);
  if (i < j) return upper_[pair_index(i, j)];
  return upper_[pair_index(j, i)] * Scalar(-1);
}

bool CurvatureSet::is_flat() const {
  return std::all_of(upper_.begin(), upper_.end(), [](const Matrix& m) { return m.is_zero(); });
}

CurvatureSet curvature(const NomizuOperator& lambda, const CompactAlgebra& alg) {
  const std::size_t n = alg.dim();
  std::vector<Matrix> upper;
  upper.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix r = commutator(lambda[i], lambda[j]);
      for (const auto& term : alg.bracket(i, j)) r -= lambda[term.index] * term.coeff;
      upper.push_back(std::move(r));
    }
  return CurvatureSet(n, std::move(upper));
}

Defect curvature_skew_defect(const CurvatureSet& r, const Matrix& g) {
  Defect d;
  const std::size_t n = r.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      const Matrix gr = g * r.upper(x, y);
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t v = z; v < n; ++v) d.update(gr(v, z) + gr(z, v), {x, y, z, v});
    }
  return d;
}

Defect curvature_hermitian_defect(const CurvatureSet& r, const Matrix& j) {
  Defect d;
  const std::size_t n = r.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      const Matrix c = commutator(r.upper(x, y), j);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) d.update(c(a, b), {x, y, a, b});
    }
  return d;
}

namespace {

// S(a,b,c,d) = g(T(a,b)^#, T(c,d)^#) = T(a,b,.) g^{-1} T(c,d,.).
class TorsionPairing {
 public:
  TorsionPairing(const Dense3& t, const Matrix& g) : n_(t.n), low_(n_ * n_), sharp_(n_ * n_) {
    const Matrix ginv = ginverse(g);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) {
        Vector v(t.v.begin() + static_cast<std::ptrdiff_t>((a * n_ + b) * n_),
                 t.v.begin() + static_cast<std::ptrdiff_t>((a * n_ + b + 1) * n_));
        sharp_[a * n_ + b] = ginv * v;
        low_[a * n_ + b] = std::move(v);
      }
  }
  Scalar operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return dot(low_[a * n_ + b], sharp_[c * n_ + d]);
  }
  Scalar sigma(std::size_t x, std::size_t y, std::size_t z, std::size_t v) const {
    return (*this)(x, y, z, v) + (*this)(y, z, x, v) + (*this)(z, x, y, v);
  }

 private:
  std::size_t n_;
  std::vector<Vector> low_;
  std::vector<Vector> sharp_;
};

}  // namespace

InvariantForm sigma_t(const InvariantForm& t, const Matrix& g) {
  const TorsionPairing s(dense(t), g);
  return InvariantForm::from_sorted(t.dim(), 4, [&](std::span<const std::size_t> i) {
    return s.sigma(i[0], i[1], i[2], i[3]);
  });
}

Defect bianchi_check(const CurvatureSet& r, const InvariantForm& t, const NomizuOperator& lambda, const Matrix& g,
                     const CompactAlgebra& alg) {
  const std::size_t n = alg.dim();
  const Dense3 td = dense(t);
  const TorsionPairing s(td, g);
  const InvariantForm dt = n >= 4 ? exterior_derivative(t, alg) : InvariantForm(n, 4);

  std::vector<Matrix> gr;  // g R(x,y) for x < y; entry (v, z) = g(R(x,y)z, v)
  gr.reserve(r.all_upper().size());
  for (const auto& m : r.all_upper()) gr.push_back(g * m);
  auto rr = [&](std::size_t x, std::size_t y, std::size_t z, std::size_t v) -> Scalar {
    if (x == y) return Scalar();
    if (x < y) return gr[x * n - x * (x + 1) / 2 + (y - x - 1)](v, z);
    return -gr[y * n - y * (y + 1) / 2 + (x - y - 1)](v, z);
  };

  Defect d;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z)
        for (std::size_t v = 0; v < n; ++v) {
          const Scalar lhs = rr(x, y, z, v) + rr(y, z, x, v) + rr(z, x, y, v);
          Scalar nabla;
          const Matrix& lv = lambda[v];
          for (std::size_t w = 0; w < n; ++w) {
            if (!lv(w, x).is_zero()) nabla -= lv(w, x) * td(w, y, z);
            if (!lv(w, y).is_zero()) nabla -= lv(w, y) * td(x, w, z);
            if (!lv(w, z).is_zero()) nabla -= lv(w, z) * td(x, y, w);
          }
          Scalar dtv = n >= 4 ? dt(std::array<std::size_t, 4>{x, y, z, v}) : Scalar();
          const Scalar rhs = dtv - s.sigma(x, y, z, v) + nabla;
          d.update(lhs - rhs, {x, y, z, v});
        }
  return d;
}

}  // namespace skt
