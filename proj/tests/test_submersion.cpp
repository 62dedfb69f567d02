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
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "skt/errors.hpp"
#include "skt/pipeline.hpp"
#include "skt/submersion.hpp"

using namespace skt;
using skt::testing::Model;
using skt::testing::q;

namespace {

const CheckRecord& find(const SubmersionReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return c;
  FAIL("missing check " << name);
  throw std::logic_error("unreachable");
}

SubmersionReport full(const Model& m, const SplitData& split) {
  const OperatorSpan span = generate_span(m.lambda, m.r, m.alg);
  return check_submersion(split, m.h, m.t, m.lambda, m.r, &span, m.alg);
}

}  // namespace

TEST_CASE("subset labels") {
  CHECK(subset_label({}) == "{}");
  CHECK(subset_label({1}) == "{a2}");
  CHECK(subset_label({0, 2}) == "{a1,a3}");
}

TEST_CASE("split bookkeeping") {
  const Model m = Model::pluriclosed("A2", {q(2), q(1)});
  const SplitData s = build_split(m.skt, {1}, m.h, m.alg);
  CHECK(s.vertical == std::vector<std::size_t>{0, 1, 4, 5});
  CHECK(s.horizontal == std::vector<std::size_t>{2, 3, 6, 7});
  CHECK(s.roots == std::vector<std::size_t>{1});
  CHECK_FALSE(s.bypassed);
  CHECK(s.vertical_projector + s.horizontal_projector == Matrix::identity(8));
  CHECK(s.vertical_projector * s.vertical_projector == s.vertical_projector);
  CHECK(validate_split(s, m.h, m.alg).ok());

  const SplitData e = build_split(m.skt, {}, m.h, m.alg);
  CHECK(e.vertical.size() == 2);
  CHECK(e.horizontal.size() == 6);

  const Model g2 = Model::pluriclosed("G2", {q(1), q(1)});
  CHECK(build_split(g2.skt, {0, 1}, g2.h, g2.alg).horizontal.empty());
  CHECK(build_split(g2.skt, {0}, g2.h, g2.alg).vertical.size() == 4);
}

TEST_CASE("splits outside I_max are refused") {
  const Model m = Model::pluriclosed("A2", {q(2), q(1)});
  CHECK_THROWS_WITH_AS(build_split(m.skt, {0}, m.h, m.alg),
                       "I = {a1} is not contained in I_max = {a2} (a1 has c != 1)", PreconditionError);
  CHECK(build_split_unchecked({0}, m.h, m.alg).bypassed);
}

TEST_CASE("every valid split passes every check") {
  for (const Model& m : {Model::pluriclosed("A2", {q(2), q(1)}), Model::pluriclosed("A2", {q(1), q(1)}),
                         Model::pluriclosed("B2", {q(3, 2), q(1)}, {q(2)}), Model::pluriclosed("B2", {q(1), q(5, 3)}),
                         Model::pluriclosed("G2", {q(4, 3), q(1)}),
                         Model::pluriclosed("A1+A1", {q(1), q(1)}, {q(3, 2), q(3, 2)})}) {
    for (const auto& subset : enumerate_submersions(m.skt, 256)) {
      CAPTURE(subset_label(subset));
      const SplitData split = build_split(m.skt, subset, m.h, m.alg);
      const SubmersionReport rep = full(m, split);
      CHECK(rep.checks.size() == 9);
      for (const auto& c : rep.checks) {
        CAPTURE(c.name);
        CHECK(c.pass);
        CHECK(c.defect.ok());
      }
      CHECK(rep.all_pass());
      CHECK(rep.vertical_dim + rep.horizontal_dim == m.alg.dim());
    }
  }
}

TEST_CASE("a vanishing torsion form passes the torsion checks trivially") {
  const Model m = Model::pluriclosed("A2", {q(2), q(1)});
  const SplitData split = build_split(m.skt, {1}, m.h, m.alg);
  const InvariantForm zero(8, 3);
  CHECK(torsion_type_check(zero, split).ok());
  CHECK(one_one_check(zero, m.h.j, split).ok());
  const ObstructionResult ob = projected_torsion_obstruction(zero, split, m.h.g, m.alg);
  CHECK(ob.identity.ok());
  CHECK(ob.obstruction.ok());
  CHECK(horizontal_component(zero, split).is_zero());
}

TEST_CASE("type components add back to the torsion") {
  const Model m = Model::pluriclosed("G2", {q(4, 3), q(1)});
  const SplitData split = build_split(m.skt, {1}, m.h, m.alg);
  const InvariantForm th = horizontal_component(m.t, split);
  const InvariantForm tm = mixed_component(m.t, split);
  // T has no VVH part on a valid split, so T = T^H + T^m + T|_V.
  const std::size_t n = m.alg.dim();
  bool vertical_part = false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        const bool vvv = split.is_vertical(a) && split.is_vertical(b) && split.is_vertical(c);
        const Scalar tv = vvv ? m.t(a, b, c) : Scalar();
        vertical_part = vertical_part || !tv.is_zero();
        CHECK(m.t(a, b, c) == th(a, b, c) + tm(a, b, c) + tv);
      }
  CHECK(vertical_part);
}

TEST_CASE("base obstruction values") {
  const Model a2 = Model::pluriclosed("A2", {q(2), q(1)});
  CHECK(full(a2, build_split(a2.skt, {}, a2.h, a2.alg)).base_obstruction.max == q(24));
  CHECK(full(a2, build_split(a2.skt, {1}, a2.h, a2.alg)).base_obstruction.ok());
  const Model g2 = Model::pluriclosed("G2", {q(4, 3), q(1)});
  CHECK(full(g2, build_split(g2.skt, {}, g2.h, g2.alg)).base_obstruction.max == q(96));
  CHECK(full(g2, build_split(g2.skt, {1}, g2.h, g2.alg)).base_obstruction.max == q(384));
}

TEST_CASE("bypassed split on A2 with c = (2,1)") {
  const Model m = Model::pluriclosed("A2", {q(2), q(1)});
  const SplitData split = build_split_unchecked({0}, m.h, m.alg);
  CHECK(validate_split(split, m.h, m.alg).ok());
  const SubmersionReport rep = full(m, split);
  CHECK_FALSE(rep.all_pass());
  // The torsion-type condition itself does not see the violation.
  CHECK(find(rep, "torsion_type").defect.ok());
  CHECK(find(rep, "one_one").defect.ok());
  CHECK(find(rep, "projected_torsion_identity").defect.max == q(24));
  CHECK(find(rep, "mixed_curvature").defect.max == q(24));
  CHECK(find(rep, "connection_projection").defect.max == q(12));
  CHECK(find(rep, "holonomy_invariant").defect.max == q(1, 4));
  CHECK_FALSE(find(rep, "mixed_curvature").defect.witness.empty());
}

TEST_CASE("holonomy check is omitted without a span") {
  const Model m = Model::pluriclosed("A2", {q(2), q(1)});
  const SplitData split = build_split(m.skt, {1}, m.h, m.alg);
  const SubmersionReport rep = check_submersion(split, m.h, m.t, m.lambda, m.r, nullptr, m.alg);
  CHECK(rep.checks.size() == 8);
  CHECK(rep.all_pass());
}
