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

// sktholo: SKT checks, Bismut holonomy and submersion certificates for
// Samelson structures on compact Lie groups. Talks to the library only
// through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "skt/skt.h"

namespace {

struct SessionDeleter {
  void operator()(skt_session* s) const { skt_session_destroy(s); }
};
using Session = std::unique_ptr<skt_session, SessionDeleter>;

struct Options {
  std::string config;
  std::string out;
  std::size_t max_dim = 64;
  bool negative_controls = false;
  bool no_timings = false;
};

int execute(skt_stage stage, const Options& opt) {
  skt_session* raw = nullptr;
  skt_status st = skt_session_from_file(opt.config.c_str(), &raw);
  if (st != SKT_OK) {
    std::cerr << "sktholo: " << skt_last_error() << "\n";
    return st == SKT_ERR_IO ? 2 : static_cast<int>(st);
  }
  Session session(raw);
  skt_session_set_max_dim(session.get(), opt.max_dim);
  skt_session_set_negative_controls(session.get(), opt.negative_controls ? 1 : 0);

  st = skt_session_run(session.get(), stage);
  if (st == SKT_ERR_INTERNAL || st == SKT_ERR_INVALID_ARGUMENT) {
    std::cerr << "sktholo: " << skt_session_last_error(session.get()) << "\n";
    return 70;
  }
  for (std::size_t i = 0; i < skt_session_warning_count(session.get()); ++i)
    std::cerr << "sktholo: warning: " << skt_session_warning(session.get(), i) << "\n";

  const char* report = skt_session_report_json(session.get(), opt.no_timings ? 0 : 1);
  std::string path = opt.out.empty() ? skt_session_output_path(session.get()) : opt.out;
  if (report != nullptr) {
    if (path.empty() || path == "-") {
      std::cout << report;
    } else {
      std::ofstream os(path, std::ios::binary);
      if (!os || !(os << report)) {
        std::cerr << "sktholo: cannot write report to '" << path << "'\n";
        return 2;
      }
    }
  }
  switch (st) {
    case SKT_OK: std::cerr << "sktholo: all checks pass\n"; break;
    case SKT_CHECK_FAILED: std::cerr << "sktholo: some checks failed, see report summary\n"; break;
    default: std::cerr << "sktholo: " << skt_session_last_error(session.get()) << "\n"; break;
  }
  return static_cast<int>(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bismut holonomy of SKT Samelson structures on compact Lie groups"};
  app.set_version_flag("--version", std::string(skt_version()));
  app.require_subcommand(1);

  Options opt;
  skt_stage stage = SKT_STAGE_REPORT;
  struct Sub {
    const char* name;
    const char* help;
    skt_stage stage;
  };
  const Sub subs[] = {
      {"check", "SKT verdict and identity checks", SKT_STAGE_CHECK},
      {"holonomy", "check + holonomy span and invariant decomposition", SKT_STAGE_HOLONOMY},
      {"submersion", "holonomy + submersion certificates", SKT_STAGE_SUBMERSION},
      {"report", "everything, with diagnostics", SKT_STAGE_REPORT},
  };
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--config", opt.config, "configuration file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", opt.out, "report path ('-' for stdout); overrides output.path");
    sub->add_option("--max-dim", opt.max_dim, "refuse algebras above this dimension")->check(CLI::PositiveNumber);
    sub->add_flag("--negative-controls", opt.negative_controls, "include bypassed-precondition splits");
    sub->add_flag("--no-timings", opt.no_timings, "omit timings_ms from the report");
    const skt_stage st = s.stage;
    sub->callback([&stage, st] { stage = st; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  return execute(stage, opt);
}
