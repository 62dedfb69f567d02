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


#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"
#include "skt/connection.hpp"
#include "skt/errors.hpp"

using namespace skt;
using skt::testing::Model;
using skt::testing::q;

namespace {

// -g([JX,JY],Z) - g([JY,JZ],X) - g([JZ,JX],Y) for arbitrary basis vectors.
Scalar raw_torsion(const Model& m, std::size_t x, std::size_t y, std::size_t z) {
  auto gb = [&](std::size_t a, std::size_t b, std::size_t c) {
    const Vector br = m.alg.bracket(m.h.j.column(a), m.h.j.column(b));
    Vector ec(m.alg.dim());
    ec[c] = 1;
    return dot(br, m.h.g * ec);
  };
  return -(gb(x, y, z) + gb(y, z, x) + gb(z, x, y));
}

std::vector<Model> sample_models() {
  std::vector<Model> out;
  out.push_back(Model::pluriclosed("A2", {q(1), q(1)}));
  out.push_back(Model::pluriclosed("A2", {q(2), q(1)}));
  out.push_back(Model::pluriclosed("A2", {q(3, 2), q(5, 7)}));
  out.push_back(Model::pluriclosed("B2", {q(3, 2), q(1)}, {q(2)}));
  out.push_back(Model::pluriclosed("G2", {q(4, 3), q(1)}));
  out.push_back(Model::pluriclosed("A1+A1", {q(3), q(1, 2)}, {q(2), q(2)}));
  out.push_back(Model::with_roots("A2", {q(2), q(1), q(5)}));  // not pluriclosed
  out.push_back(Model::with_roots("B2", {q(1), q(2), q(1, 3), q(4)}));
  return out;
}

}  // namespace

TEST_CASE("invariant forms are antisymmetric by construction") {
  InvariantForm f(6, 3);
  const std::array<std::size_t, 3> sorted{1, 3, 4};
  f.set_sorted(sorted, q(5, 2));
  CHECK(f(1, 3, 4) == q(5, 2));
  CHECK(f(3, 1, 4) == q(-5, 2));
  CHECK(f(4, 3, 1) == q(-5, 2));
  CHECK(f(4, 1, 3) == q(5, 2));
  CHECK(f(1, 1, 4).is_zero());
  CHECK(f(0, 3, 4).is_zero());
  const Vector v{0, 2, 0, 7, 0, 0};
  const std::array<std::size_t, 2> rest{3, 4};
  CHECK(f.contract_first(v, rest) == Scalar(5));  // 2 * 5/2 + 7 * 0
  CHECK(f.coefficients().size() == 20);
  InvariantForm g(6, 3);
  const auto d = f.difference(g);
  CHECK(d.max == q(5, 2));
  CHECK(d.witness == std::vector<std::size_t>{1, 3, 4});
}

TEST_CASE("combinations are enumerated in lexicographic order") {
  std::vector<std::vector<std::size_t>> seen;
  for_each_combination(4, 2, [&](std::span<const std::size_t> c) { seen.emplace_back(c.begin(), c.end()); });
  CHECK(seen == std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  std::size_t count = 0;
  for_each_combination(5, 0, [&](std::span<const std::size_t>) { ++count; });
  CHECK(count == 1);
  for_each_combination(2, 3, [&](std::span<const std::size_t>) { ++count; });
  CHECK(count == 1);
}

TEST_CASE("frozen torsion values on bi-invariant A2") {
  const Model m = Model::pluriclosed("A2", {q(1), q(1)});
  const std::size_t x1 = m.alg.x_index(0), y1 = m.alg.y_index(0);
  CHECK(m.t(x1, y1, 0) == Scalar(-24));
  CHECK(m.t(x1, y1, 1) == Scalar(12));
}

TEST_CASE("torsion agrees with the raw formula on every ordered triple") {
  const Model m = Model::pluriclosed("A2", {q(2), q(1)});
  const std::size_t n = m.alg.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) CHECK(m.t(x, y, z) == raw_torsion(m, x, y, z));
}

TEST_CASE("chevalley-eilenberg differential") {
  const CompactAlgebra a2 = skt::testing::algebra("A2");
  // d theta (X, Y) = -theta([X, Y]) for a 1-form.
  InvariantForm theta(8, 1);
  const std::array<std::size_t, 1> t1{0};
  theta.set_sorted(t1, Scalar(1));
  const InvariantForm dtheta = exterior_derivative(theta, a2);
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) CHECK(dtheta(x, y) == -a2.structure_constant(x, y, 0));
  CHECK_THROWS_AS(exterior_derivative(InvariantForm(8, 8), a2), std::invalid_argument);
}

TEST_CASE("identity suite on sample structures") {
  for (const Model& m : sample_models()) {
    CAPTURE(m.alg.root_system().factors()[0].name());
    const InvariantForm omega = fundamental_form(m.h.g, m.h.j);
    CHECK(m.t.difference(minus_dc(omega, m.h.j, m.alg)).ok());
    const InvariantForm dom = exterior_derivative(omega, m.alg);
    CHECK(exterior_derivative(dom, m.alg).is_zero());
    const InvariantForm dt = exterior_derivative(m.t, m.alg);
    if (m.alg.dim() >= 5) CHECK(exterior_derivative(dt, m.alg).is_zero());
    CHECK(nomizu_metric_defect(m.lambda, m.h.g).ok());
    CHECK(nomizu_hermitian_defect(m.lambda, m.h.j).ok());
    CHECK(nomizu_torsion_defect(m.lambda, m.t, m.h.g, m.alg).ok());
    CHECK(nomizu_difference(m.lambda, nomizu_from_complex_structure(m.h, m.alg)).ok());
    CHECK(curvature_skew_defect(m.r, m.h.g).ok());
    CHECK(curvature_hermitian_defect(m.r, m.h.j).ok());
    CHECK(bianchi_check(m.r, m.t, m.lambda, m.h.g, m.alg).ok());
  }
}

TEST_CASE("dT vanishes exactly on the pluriclosed family and not off it") {
  std::mt19937 rng(20260317);
  std::uniform_int_distribution<int> num(1, 9), den(1, 5);
  for (int trial = 0; trial < 6; ++trial) {
    const std::vector<Scalar> cs = {q(num(rng), den(rng)), q(num(rng), den(rng))};
    auto skt = extend_pluriclosed(skt::testing::algebra("A2").root_system(), cs);
    const Model m = Model::with_roots("A2", skt.c_all);
    CHECK(exterior_derivative(m.t, m.alg).is_zero());
    auto broken = skt.c_all;
    broken[2] += q(1, 3);
    const Model b = Model::with_roots("A2", broken);
    CHECK_FALSE(exterior_derivative(b.t, b.alg).is_zero());
  }
}

TEST_CASE("bi-invariant metric is Bismut-flat") {
  for (const char* t : {"A2", "B2", "G2"}) {
    const Model m = Model::pluriclosed(t, {q(1), q(1)});
    CHECK(m.r.is_flat());
    // Flat Bismut connection of a bi-invariant metric: Lambda = 0 or Lambda = ad.
    bool all_zero = true, all_ad = true;
    for (std::size_t x = 0; x < m.alg.dim(); ++x) {
      all_zero = all_zero && m.lambda[x].is_zero();
      all_ad = all_ad && m.lambda[x] == m.alg.ad(x);
    }
    CHECK((all_zero || all_ad));
  }
}

TEST_CASE("metric parameters enter the connection") {
  const Model bi = Model::pluriclosed("A2", {q(1), q(1)});
  const Model m = Model::pluriclosed("A2", {q(2), q(1)});
  // The Bismut operator of a bi-invariant metric vanishes. Off it, the
  // parameters show up along the torus and the c = 1 root space, while
  // Lambda along g_{a1} and g_{a1+a2} stays zero.
  const std::size_t x1 = m.alg.x_index(0), x2 = m.alg.x_index(1), x12 = m.alg.x_index(2);
  CHECK(bi.lambda[x1].is_zero());
  CHECK(m.lambda[x1] == bi.lambda[x1]);
  CHECK(m.lambda[x12].is_zero());
  CHECK_FALSE(m.lambda[0] == bi.lambda[0]);
  CHECK_FALSE(m.lambda[x2] == bi.lambda[x2]);
  // The Levi-Civita part does move along X_{a1}.
  CHECK_FALSE(nomizu(m.h.g, InvariantForm(8, 3), m.alg)[x1] == nomizu(bi.h.g, InvariantForm(8, 3), bi.alg)[x1]);
  CHECK_FALSE(m.r.is_flat());
  CHECK(m.r(3, 2) == m.r(2, 3) * Scalar(-1));
  CHECK(m.r(4, 4).is_zero());
}

TEST_CASE("sigma_T is a 4-form given by the cyclic sum") {
  const Model m = Model::pluriclosed("A2", {q(2), q(1)});
  const std::size_t n = m.alg.dim();
  const auto ginv = *inverse(m.h.g);
  auto pair = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    Vector u(n), v(n);
    for (std::size_t w = 0; w < n; ++w) {
      u[w] = m.t(a, b, w);
      v[w] = m.t(c, d, w);
    }
    return dot(u, ginv * v);
  };
  const InvariantForm s = sigma_t(m.t, m.h.g);
  std::array<std::size_t, 4> idx{0, 2, 3, 5};
  do {
    const Scalar direct = pair(idx[0], idx[1], idx[2], idx[3]) + pair(idx[1], idx[2], idx[0], idx[3]) +
                          pair(idx[2], idx[0], idx[1], idx[3]);
    CHECK(s(idx) == direct);
  } while (std::next_permutation(idx.begin(), idx.end()));
}

TEST_CASE("incompatible structures are refused") {
  const CompactAlgebra a2 = skt::testing::algebra("A2");
  Matrix rot(2, 2);
  rot(0, 1) = -1;
  rot(1, 0) = 1;
  const HermitianStructure h = make_hermitian(a2, rot, {q(1)}, {q(1), q(1), q(1)});
  CHECK_THROWS_AS(fundamental_form(h.g, h.j), PreconditionError);
}
