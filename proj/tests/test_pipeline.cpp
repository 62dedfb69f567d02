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
using skt::testing::q;

namespace {

constexpr const char* kA2 =
    "group.factors = A2\n"
    "complex_structure.j_torus = -sqrt(3)/3, 2*sqrt(3)/3 ; -2*sqrt(3)/3, sqrt(3)/3\n"
    "metric.lambda = 1\n";

std::string a2(const std::string& extra) { return std::string(kA2) + extra; }

RunResult run_text(const std::string& text, Stage stage = Stage::Report) {
  RunOptions opts;
  opts.stage = stage;
  return run(RunConfig::parse(text), opts);
}

std::vector<std::string> labels(const std::vector<std::vector<std::size_t>>& sets) {
  std::vector<std::string> out;
  for (const auto& s : sets) out.push_back(subset_label(s));
  return out;
}

}  // namespace

TEST_CASE("config parsing") {
  const RunConfig c = RunConfig::parse(a2("metric.c_simple = a1=2, a2=1  # comment\nsubmersion.sets = {} ; {a2}\n"));
  CHECK(c.group_text == "A2");
  CHECK(c.j_torus(0, 1) == Scalar::parse("2*sqrt(3)/3"));
  REQUIRE(c.c_simple.has_value());
  CHECK(c.c_simple->size() == 2);
  CHECK(c.c_simple->at(0).second == q(2));
  CHECK(c.set_mode == RunConfig::SetMode::Explicit);
  CHECK(c.sets.size() == 2);
  CHECK(c.sets[0].empty());
  CHECK(c.sets[1] == std::vector<std::string>{"a2"});
  CHECK_FALSE(c.skip_holonomy);
}

TEST_CASE("malformed configs are parse errors") {
  CHECK_THROWS_AS(RunConfig::parse(a2("metric.c_simple = a1=2, a2=1\nmetric.colour = red\n")), ParseError);
  CHECK_THROWS_AS(RunConfig::parse(a2("metric.c_simple = a1=2, a2=1\nmetric.lambda = 2\n")), ParseError);
  CHECK_THROWS_AS(RunConfig::parse(a2("metric.c_simple = a1=2 a2=1\n")), ParseError);
  CHECK_THROWS_AS(RunConfig::parse(a2("metric.c_simple\n")), ParseError);
  CHECK_THROWS_AS(RunConfig::parse(a2("")), ParseError);
  CHECK_THROWS_AS(RunConfig::parse(a2("metric.c_simple = a1=2, a2=1\nmetric.c_roots = a1=1, a2=1, a1+a2=1\n")),
                  ParseError);
  CHECK_THROWS_AS(RunConfig::parse(a2("metric.c_simple = a1=2, a2=1\nmode.checks_only = maybe\n")), ParseError);
  CHECK_THROWS_WITH(RunConfig::parse(a2("metric.c_simple = a1=2, a2=1\nbogus.key = 1\n")),
                    doctest::Contains("line 5"));
}

TEST_CASE("semantic input errors map to exit codes") {
  CHECK(run_text(a2("metric.c_simple = a1=2, a3=1\n")).exit_code == exit_code::kParse);
  CHECK(run_text(a2("metric.c_roots = a1=2, a2=1, a1+a3=2\n")).exit_code == exit_code::kParse);
  const RunResult neg = run_text(a2("metric.c_simple = a1=1/4, a2=1/4\n"));
  CHECK(neg.exit_code == exit_code::kPrecondition);
  CHECK(neg.error == "c_{a1+a2} = -1/2 <= 0");
  CHECK(neg.report["error"].is_object());
  CHECK(run_text(a2("metric.c_simple = a1=2, a2=1\nsubmersion.sets = {a1}\n")).exit_code ==
        exit_code::kPrecondition);
  // J not compatible with the metric when the two A1 factors are scaled differently.
  CHECK(run_text("group.factors = A1+A1\ncomplex_structure.j_torus = 0, -1 ; 1, 0\nmetric.lambda = 1, 2\n"
                 "metric.c_simple = a1=1, a2=1\n")
            .exit_code == exit_code::kPrecondition);
}

TEST_CASE("submersion enumeration") {
  const CompactAlgebra a2 = testing::algebra("A2");
  const SktParameters none = extend_pluriclosed(a2.root_system(), std::vector<Scalar>{q(2), q(3)});
  CHECK(labels(enumerate_submersions(none, 256)) == std::vector<std::string>{"{}"});
  const SktParameters one = extend_pluriclosed(a2.root_system(), std::vector<Scalar>{q(2), q(1)});
  CHECK(labels(enumerate_submersions(one, 256)) == std::vector<std::string>{"{}", "{a2}"});
  const SktParameters all = extend_pluriclosed(a2.root_system(), std::vector<Scalar>{q(1), q(1)});
  CHECK(labels(enumerate_submersions(all, 256)) == std::vector<std::string>{"{}", "{a1}", "{a2}", "{a1,a2}"});

  std::vector<std::string> warnings;
  CHECK(enumerate_submersions(all, 2, &warnings).size() == 4);
  CHECK(warnings.size() == 1);
}

TEST_CASE("full run on A2 with c = (2,1)") {
  const RunResult r = run_text(a2("metric.c_simple = a1=2, a2=1\nsubmersion.sets = all\n"));
  CHECK(r.exit_code == exit_code::kOk);
  CHECK(r.report["summary"]["all_checks_pass"] == true);
  CHECK(r.report["skt"]["pluriclosed"] == true);
  CHECK(r.report["skt"]["i_max"] == nlohmann::json::array({"a2"}));
  CHECK(r.report["holonomy"]["span_dimension"] == 8);
  REQUIRE(r.report["submersions"].size() == 2);
  CHECK(r.report["submersions"][0]["I"] == "{}");
  CHECK(r.report["submersions"][1]["I"] == "{a2}");
  CHECK(r.report.back().is_object());
  CHECK(r.report.items().begin().key() == "tool");
  std::string last;
  for (const auto& item : r.report.items()) last = item.key();
  CHECK(last == "timings_ms");
}

TEST_CASE("non-pluriclosed input is reported, not rejected") {
  const RunResult r = run_text(a2("metric.c_roots = a1=2, a2=1, a1+a2=5\n"), Stage::Check);
  CHECK(r.exit_code == exit_code::kOk);
  CHECK(r.report["skt"]["pluriclosed"] == false);
  CHECK(r.report["skt"]["dT_max_abs"] == "144");
  CHECK(r.report["skt"]["verdicts_agree"] == true);
}

TEST_CASE("stages stop early") {
  const std::string text = a2("metric.c_simple = a1=2, a2=1\n");
  const RunResult check = run_text(text, Stage::Check);
  CHECK_FALSE(check.report.contains("holonomy"));
  CHECK_FALSE(check.report.contains("submersions"));
  const RunResult hol = run_text(text, Stage::Holonomy);
  CHECK(hol.report.contains("holonomy"));
  CHECK_FALSE(hol.report.contains("submersions"));
}

TEST_CASE("negative controls are flagged and do not fail the run") {
  RunOptions opts;
  opts.negative_controls = true;
  const RunResult r = run(RunConfig::parse(a2("metric.c_simple = a1=2, a2=1\n")), opts);
  CHECK(r.exit_code == exit_code::kOk);
  REQUIRE(r.report.contains("negative_controls"));
  CHECK_FALSE(r.report["negative_controls"].empty());
}

TEST_CASE("reports are deterministic and rationals round-trip") {
  const std::string text =
      "group.factors = A2\n"
      "complex_structure.j_torus = -sqrt(3)/3, 2*sqrt(3)/3 ; -2*sqrt(3)/3, sqrt(3)/3\n"
      "metric.lambda = 5/2\n"
      "metric.c_simple = a1=7/3, a2=1\n";
  const RunResult a = run_text(text);
  const RunResult b = run_text(text);
  CHECK(without_timings(a.report).dump() == without_timings(b.report).dump());
  CHECK_FALSE(without_timings(a.report).contains("timings_ms"));
  CHECK(a.report["input"]["c_simple"]["a1"] == "7/3");
  CHECK(Scalar::parse(a.report["input"]["lambda"][0].get<std::string>()) == q(5, 2));
  for (const auto& row : a.report["input"]["j_torus"])
    for (const auto& e : row) CHECK(Scalar::parse(e.get<std::string>()).to_string() == e.get<std::string>());
}
