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


#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "skt/errors.hpp"
#include "skt/hermitian.hpp"

using namespace skt;
using skt::testing::algebra;
using skt::testing::compatible_j_torus;
using skt::testing::q;

namespace {

Matrix rotation() {
  Matrix m(2, 2);
  m(0, 1) = -1;
  m(1, 0) = 1;
  return m;
}

std::vector<Scalar> ones(std::size_t n) { return std::vector<Scalar>(n, Scalar(1)); }

}  // namespace

TEST_CASE("Samelson J rotates root spaces and squares to -1") {
  const CompactAlgebra a2 = algebra("A2");
  const Matrix j = samelson_j(a2, rotation());
  for (std::size_t a = 0; a < 3; ++a) {
    const Vector jx = j.column(a2.x_index(a));
    const Vector jy = j.column(a2.y_index(a));
    for (std::size_t k = 0; k < a2.dim(); ++k) {
      CHECK(jx[k] == Scalar(k == a2.y_index(a) ? 1 : 0));
      CHECK(jy[k] == Scalar(k == a2.x_index(a) ? -1 : 0));
    }
  }
  CHECK(j * j == Matrix::identity(8) * Scalar(-1));
  CHECK_THROWS_AS(samelson_j(algebra("A1"), Matrix(1, 1)), PreconditionError);
  try {
    samelson_j(algebra("A1"), Matrix(1, 1));
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("odd rank") != std::string::npos);
  }
  CHECK_THROWS_AS(samelson_j(a2, Matrix::identity(2)), PreconditionError);
  CHECK_THROWS_AS(samelson_j(a2, Matrix::identity(3)), PreconditionError);
}

TEST_CASE("metric entries from the Killing form") {
  const CompactAlgebra a1a1 = algebra("A1+A1");
  const std::vector<Scalar> lambda = {q(3), q(5, 2)};
  const std::vector<Scalar> c = {q(7), q(1, 3)};
  const Matrix g = build_metric(a1a1, lambda, c);
  CHECK(g(0, 0) == Scalar(24));  // 8 lambda_1
  CHECK(g(1, 1) == Scalar(20));  // 8 lambda_2
  CHECK(g(a1a1.x_index(0), a1a1.x_index(0)) == Scalar(168));  // 8 lambda c
  CHECK(g(a1a1.y_index(1), a1a1.y_index(1)) == q(20, 3));
  CHECK(g == g.transpose());
  CHECK_THROWS_AS(build_metric(a1a1, lambda, std::vector<Scalar>{q(0), q(1)}), PreconditionError);
  CHECK_THROWS_AS(build_metric(a1a1, std::vector<Scalar>{q(-1), q(1)}, c), PreconditionError);
  try {
    build_metric(a1a1, lambda, std::vector<Scalar>{q(0), q(1)});
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("a1") != std::string::npos);
  }
}

TEST_CASE("compatibility of the torus complex structures") {
  for (const char* t : {"A2", "B2", "G2"}) {
    CAPTURE(t);
    const CompactAlgebra alg = algebra(t);
    const Matrix j = samelson_j(alg, compatible_j_torus(t));
    // Any c: root blocks are always compatible.
    std::vector<Scalar> c;
    for (std::size_t k = 0; k < alg.root_system().num_positive(); ++k) c.push_back(q(static_cast<long>(k) + 2, 3));
    CHECK(check_compatibility(build_metric(alg, ones(1), c), j).compatible);
  }
  // The plain rotation in the coroot basis is not orthogonal for A2's torus metric.
  const CompactAlgebra a2 = algebra("A2");
  const auto res = check_compatibility(build_metric(a2, ones(1), ones(3)), samelson_j(a2, rotation()));
  CHECK_FALSE(res.compatible);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->first < 2);
  CHECK(res.witness->second < 2);
}

TEST_CASE("factor-mixing J on A1+A1 needs equal lambdas") {
  const CompactAlgebra alg = algebra("A1+A1");
  const Matrix j = samelson_j(alg, compatible_j_torus("A1+A1"));
  CHECK(check_compatibility(build_metric(alg, std::vector<Scalar>{q(2), q(2)}, ones(2)), j).compatible);
  const auto bad = check_compatibility(build_metric(alg, std::vector<Scalar>{q(1), q(2)}, ones(2)), j);
  CHECK_FALSE(bad.compatible);
  REQUIRE(bad.witness.has_value());
  CHECK(alg.label(bad.witness->first).kind == BasisKind::Torus);
}

TEST_CASE("pluriclosed extension") {
  const RootSystem a2 = build_root_system(CartanSpec::parse("A2"));
  const SktParameters p = extend_pluriclosed(a2, std::vector<Scalar>{q(2), q(1)});
  CHECK(p.c_all == std::vector<Scalar>{q(2), q(1), q(2)});
  CHECK(p.i_max == std::vector<std::size_t>{1});
  CHECK(p.delta_i_max == std::vector<std::size_t>{1});
  CHECK(pluriclosed_relation(a2, p.c_all).holds());

  const SktParameters bi = extend_pluriclosed(a2, ones(2));
  CHECK(bi.c_all == ones(3));
  CHECK(bi.delta_i_max.size() == 3);

  try {
    extend_pluriclosed(a2, std::vector<Scalar>{q(1, 4), q(1, 4)});
    FAIL("expected rejection");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()) == "c_{a1+a2} = -1/2 <= 0");
  }
}

TEST_CASE("extension satisfies the additive relation on every root pair") {
  for (const char* t : {"A3", "B3", "C3", "G2", "F4", "A2+G2"}) {
    CAPTURE(t);
    const RootSystem rs = build_root_system(CartanSpec::parse(t));
    std::vector<Scalar> cs;
    for (std::size_t i = 0; i < rs.rank(); ++i) cs.push_back(i % 2 == 0 ? q(1) : q(static_cast<long>(i) + 3, 2));
    const SktParameters p = extend_pluriclosed(rs, cs);
    CHECK(pluriclosed_relation(rs, p.c_all).holds());
    for (std::size_t a : p.delta_i_max) CHECK(p.c_all[a] == Scalar(1));
    for (std::size_t i : p.i_max) CHECK(cs[i] == Scalar(1));
  }
}

TEST_CASE("relation witness for non-pluriclosed coefficients") {
  const RootSystem a2 = build_root_system(CartanSpec::parse("A2"));
  const auto rel = pluriclosed_relation(a2, std::vector<Scalar>{q(2), q(1), q(5)});
  CHECK_FALSE(rel.holds());
  CHECK(rel.max_defect == Scalar(3));
  REQUIRE(rel.witness.has_value());
  CHECK(rel.witness->first == 0);
  CHECK(rel.witness->second == 1);
}

TEST_CASE("fundamental form is antisymmetric") {
  const CompactAlgebra g2 = algebra("G2");
  const auto skt = extend_pluriclosed(g2.root_system(), std::vector<Scalar>{q(4, 3), q(1)});
  const HermitianStructure h = make_hermitian(g2, compatible_j_torus("G2"), ones(1), skt.c_all);
  CHECK(h.omega == h.omega.transpose() * Scalar(-1));
  CHECK(h.omega == h.j.transpose() * h.g);
}
