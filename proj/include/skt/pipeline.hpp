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

#ifndef SKT_PIPELINE_HPP
#define SKT_PIPELINE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "skt/hermitian.hpp"
#include "skt/linalg.hpp"
#include "skt/rootsys.hpp"

namespace skt {

/// Parsed configuration file. Keys:
///   group.factors            A2 | A1+A1 | G2 x B2 ...
///   complex_structure.j_torus  rows separated by ';', entries by ','
///   metric.lambda            one value per simple factor, comma separated
///   metric.c_simple          a1=2, a2=1   (pluriclosed extension to all roots)
///   metric.c_roots           a1=2, a2=1, a1+a2=5   (explicit, possibly non-SKT)
///   submersion.sets          all | none | {} ; {a2}
///   output.path              report destination
///   mode.skip_holonomy       true | false
///   mode.checks_only         true | false
struct RunConfig {
  enum class SetMode { All, None, Explicit };
  using Assignment = std::vector<std::pair<std::string, Scalar>>;

  std::string group_text;
  CartanSpec group;
  Matrix j_torus;
  std::vector<Scalar> lambda;
  std::optional<Assignment> c_simple;
  std::optional<Assignment> c_roots;
  SetMode set_mode = SetMode::All;
  std::vector<std::vector<std::string>> sets;
  std::string output_path;
  bool skip_holonomy = false;
  bool checks_only = false;

  /// Throws ParseError with the line number on malformed input or unknown keys.
  static RunConfig parse(std::string_view text);
};

enum class Stage { Check, Holonomy, Submersion, Report };
const char* stage_name(Stage stage);

struct RunOptions {
  Stage stage = Stage::Report;
  std::size_t max_dim = 64;
  bool negative_controls = false;
  /// Structure-constant cache; empty disables caching.
  std::string cache_dir;
  /// Warn when 2^|I_max| exceeds this many subsets.
  std::size_t subset_cap = 256;
};

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kParse = 2;
inline constexpr int kPrecondition = 3;
}  // namespace exit_code

struct RunResult {
  /// Deterministic field order; "timings_ms" is always the last member.
  nlohmann::ordered_json report;
  int exit_code = exit_code::kOk;
  std::string error;
  std::vector<std::string> warnings;
};

/// Subsets of i_max by size, then lexicographically. Appends a warning when
/// there are more than `cap` of them.
std::vector<std::vector<std::size_t>> enumerate_submersions(const SktParameters& skt, std::size_t cap,
                                                            std::vector<std::string>* warnings = nullptr);

/// Runs the pipeline up to `options.stage`. Never throws for bad input: parse
/// and precondition failures come back as exit codes with a partial report.
RunResult run(const RunConfig& config, const RunOptions& options);

/// The report without "timings_ms", for byte-level comparisons.
nlohmann::ordered_json without_timings(nlohmann::ordered_json report);

}  // namespace skt

#endif  // SKT_PIPELINE_HPP
