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

#include "fixtures.hpp"

#include <array>
#include <set>
#include <stdexcept>

namespace skt::testing {

Scalar q(long num, long den) { return Scalar(mpq_class(num, den)); }
Scalar parse(const char* text) { return Scalar::parse(text); }

CompactAlgebra algebra(const std::string& type) {
  const RootSystem rs = build_root_system(CartanSpec::parse(type));
  return build_compact_algebra(rs, chevalley_constants(rs));
}

Matrix compatible_j_torus(const std::string& type) {
  Matrix m(2, 2);
  if (type == "A2") {
    const Scalar s = parse("sqrt(3)/3");
    m(0, 0) = -s;
    m(0, 1) = s * 2;
    m(1, 0) = s * -2;
    m(1, 1) = s;
  } else if (type == "G2") {
    const Scalar s = parse("sqrt(3)/3");
    m(0, 0) = s * -3;
    m(0, 1) = s * 2;
    m(1, 0) = s * -6;
    m(1, 1) = s * 3;
  } else if (type == "B2") {
    m(0, 0) = -1;
    m(0, 1) = 2;
    m(1, 0) = -1;
    m(1, 1) = 1;
  } else if (type == "A1+A1") {
    m(0, 1) = -1;
    m(1, 0) = 1;
  } else {
    throw std::invalid_argument("no fixture J_torus for " + type);
  }
  return m;
}

namespace {

Model finish(CompactAlgebra alg, SktParameters skt, const std::string& type, std::vector<Scalar> lambda) {
  if (lambda.empty()) lambda.assign(alg.root_system().factors().size(), Scalar(1));
  Model m{std::move(alg), std::move(skt), {}, {}, NomizuOperator({}), CurvatureSet(0, {})};
  m.h = make_hermitian(m.alg, compatible_j_torus(type), std::move(lambda), m.skt.c_all);
  m.t = bismut_torsion(m.h, m.alg);
  m.lambda = nomizu(m.h.g, m.t, m.alg);
  m.r = curvature(m.lambda, m.alg);
  return m;
}

}  // namespace

Model Model::pluriclosed(const std::string& type, std::vector<Scalar> c_simple, std::vector<Scalar> lambda) {
  CompactAlgebra alg = algebra(type);
  SktParameters skt = extend_pluriclosed(alg.root_system(), c_simple);
  return finish(std::move(alg), std::move(skt), type, std::move(lambda));
}

Model Model::with_roots(const std::string& type, std::vector<Scalar> c_all, std::vector<Scalar> lambda) {
  CompactAlgebra alg = algebra(type);
  SktParameters skt;
  skt.c_all = std::move(c_all);
  return finish(std::move(alg), std::move(skt), type, std::move(lambda));
}

Scalar jacobi_defect(const CompactAlgebra& alg) {
  const std::size_t n = alg.dim();
  std::vector<Vector> e(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i) e[i][i] = 1;
  Scalar worst;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        Vector s = alg.bracket(e[a], alg.bracket(e[b], e[c]));
        const Vector t = alg.bracket(e[b], alg.bracket(e[c], e[a]));
        const Vector u = alg.bracket(e[c], alg.bracket(e[a], e[b]));
        for (std::size_t k = 0; k < n; ++k) {
          const Scalar x = (s[k] + t[k] + u[k]).abs();
          if (x > worst) worst = x;
        }
      }
  return worst;
}

Scalar killing_invariance_defect(const CompactAlgebra& alg) {
  const std::size_t n = alg.dim();
  const Matrix& b = alg.killing();
  Scalar worst;
  for (std::size_t x = 0; x < n; ++x) {
    const Matrix ad = alg.ad(x);
    const Matrix m = ad.transpose() * b + b * ad;
    const Scalar w = max_abs(m);
    if (w > worst) worst = w;
  }
  return worst;
}

std::vector<RootVector> weyl_closure_positive_roots(const std::vector<std::vector<int>>& cartan) {
  const std::size_t r = cartan.size();
  std::set<RootVector> roots;
  std::vector<RootVector> frontier;
  for (std::size_t i = 0; i < r; ++i) {
    RootVector e(r, 0);
    e[i] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<RootVector> next;
    for (const auto& beta : frontier)
      for (std::size_t i = 0; i < r; ++i) {
        int pairing = 0;  // <beta, alpha_i^vee>
        for (std::size_t j = 0; j < r; ++j) pairing += beta[j] * cartan[j][i];
        RootVector img = beta;
        img[i] -= pairing;
        if (roots.insert(img).second) next.push_back(img);
      }
    frontier = std::move(next);
  }
  std::vector<RootVector> positive;
  for (const auto& v : roots) {
    bool pos = true;
    for (int x : v) pos = pos && x >= 0;
    if (pos) positive.push_back(v);
  }
  return positive;
}

namespace {

// Gaussian rationals and 3x3 matrices over them.
struct Gi {
  mpq_class re, im;
};
Gi operator*(const Gi& a, const Gi& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Gi operator+(const Gi& a, const Gi& b) { return {a.re + b.re, a.im + b.im}; }
Gi operator-(const Gi& a, const Gi& b) { return {a.re - b.re, a.im - b.im}; }

using M3 = std::array<std::array<Gi, 3>, 3>;

M3 zero() {
  M3 m;
  for (auto& row : m)
    for (auto& x : row) x = {0, 0};
  return m;
}
M3 mul(const M3& a, const M3& b) {
  M3 m = zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) m[i][j] = m[i][j] + a[i][k] * b[k][j];
  return m;
}
M3 sub(const M3& a, const M3& b) {
  M3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = a[i][j] - b[i][j];
  return m;
}

}  // namespace

Su3Oracle su3_oracle(int n12) {
  // Library order: T1, T2, X_a1, Y_a1, X_a2, Y_a2, X_{a1+a2}, Y_{a1+a2}.
  const mpq_class sigma[3] = {1, 1, mpq_class(n12)};  // E_a = sigma e_ij, E_{-a} = sigma e_ji
  const int rows[3] = {0, 1, 0}, cols[3] = {1, 2, 2};
  std::vector<M3> basis;
  {
    M3 t1 = zero(), t2 = zero();
    t1[0][0] = {0, 1};
    t1[1][1] = {0, -1};
    t2[1][1] = {0, 1};
    t2[2][2] = {0, -1};
    basis.push_back(t1);
    basis.push_back(t2);
  }
  for (int a = 0; a < 3; ++a) {
    M3 x = zero(), y = zero();
    x[rows[a]][cols[a]] = {sigma[a], 0};
    x[cols[a]][rows[a]] = {-sigma[a], 0};
    y[rows[a]][cols[a]] = {0, sigma[a]};
    y[cols[a]][rows[a]] = {0, sigma[a]};
    basis.push_back(x);
    basis.push_back(y);
  }
  // Coordinates of a traceless skew-Hermitian matrix in this basis.
  auto coords = [&](const M3& m) {
    Vector v(8);
    v[0] = Scalar(m[0][0].im);
    v[1] = Scalar(-m[2][2].im);
    for (int a = 0; a < 3; ++a) {
      const Gi& z = m[rows[a]][cols[a]];
      v[2 + 2 * a] = Scalar(mpq_class(z.re * sigma[a]));
      v[3 + 2 * a] = Scalar(mpq_class(z.im * sigma[a]));
    }
    return v;
  };
  Su3Oracle o;
  o.c.assign(8, std::vector<std::vector<Scalar>>(8));
  o.killing = Matrix(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const M3 br = sub(mul(basis[i], basis[j]), mul(basis[j], basis[i]));
      o.c[i][j] = coords(br);
      const M3 p = mul(basis[i], basis[j]);
      const Gi tr = p[0][0] + p[1][1] + p[2][2];
      o.killing(i, j) = Scalar(mpq_class(6 * tr.re));
    }
  return o;
}

}  // namespace skt::testing
