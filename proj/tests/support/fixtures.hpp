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

// Shared test fixtures and independent oracles.

#ifndef SKT_TESTS_FIXTURES_HPP
#define SKT_TESTS_FIXTURES_HPP

#include <memory>
#include <string>
#include <vector>

#include "skt/compactform.hpp"
#include "skt/connection.hpp"
#include "skt/hermitian.hpp"
#include "skt/holonomy.hpp"
#include "skt/rootsys.hpp"

namespace skt::testing {

Scalar q(long num, long den = 1);
Scalar parse(const char* text);

CompactAlgebra algebra(const std::string& type);

/// A J_torus compatible with the Killing torus metric for A1+A1, A2, B2, G2.
Matrix compatible_j_torus(const std::string& type);

/// Everything downstream of a configuration, built once.
struct Model {
  CompactAlgebra alg;
  SktParameters skt;
  HermitianStructure h;
  InvariantForm t;
  NomizuOperator lambda{{}};
  CurvatureSet r{0, {}};

  static Model pluriclosed(const std::string& type, std::vector<Scalar> c_simple, std::vector<Scalar> lambda = {});
  static Model with_roots(const std::string& type, std::vector<Scalar> c_all, std::vector<Scalar> lambda = {});
};

/// Exhaustive Jacobi residual over basis triples of the compact algebra.
Scalar jacobi_defect(const CompactAlgebra& alg);
/// Exhaustive B([x,y],z) + B(y,[x,z]) over basis triples.
Scalar killing_invariance_defect(const CompactAlgebra& alg);

/// Positive roots of a simple type obtained by closing the simple roots under
/// simple reflections, from a hard-coded Cartan matrix. Independent of the
/// root-string construction in the library.
std::vector<RootVector> weyl_closure_positive_roots(const std::vector<std::vector<int>>& cartan);

/// su(3) oracle: the compact basis realized by traceless skew-Hermitian 3x3
/// matrices over Q(i). Returns the structure constants c_{ij}^k and the trace
/// form 6 tr(XY) in the library's basis order; the sign of E_{a1+a2} is fixed
/// by `n12` = N(a1, a2).
struct Su3Oracle {
  std::vector<std::vector<std::vector<Scalar>>> c;  // c[i][j][k]
  Matrix killing;
};
Su3Oracle su3_oracle(int n12);

}  // namespace skt::testing

#endif  // SKT_TESTS_FIXTURES_HPP
