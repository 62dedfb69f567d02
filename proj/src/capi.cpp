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

#include "skt/skt.h"

#include <fstream>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "skt/errors.hpp"
#include "skt/pipeline.hpp"
#include "skt/version.hpp"

struct skt_session {
  skt::RunConfig config;
  skt::RunOptions options;
  std::optional<skt::RunResult> result;
  std::string json_text;
  std::string last_error;
};

namespace {

thread_local std::string g_last_error;

skt_status fail_global(skt_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

skt_status make_session(const std::string& text, skt_session** out) {
  if (out == nullptr) return fail_global(SKT_ERR_INVALID_ARGUMENT, "output pointer is null");
  *out = nullptr;
  try {
    auto* s = new skt_session;
    try {
      s->config = skt::RunConfig::parse(text);
    } catch (...) {
      delete s;
      throw;
    }
    s->options.cache_dir = skt::default_cache_dir();
    *out = s;
    g_last_error.clear();
    return SKT_OK;
  } catch (const skt::ParseError& e) {
    return fail_global(SKT_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail_global(SKT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail_global(SKT_ERR_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

const char* skt_version(void) { return skt::kVersionString; }

const char* skt_last_error(void) { return g_last_error.c_str(); }

skt_status skt_session_from_string(const char* config_text, skt_session** out) {
  if (config_text == nullptr) return fail_global(SKT_ERR_INVALID_ARGUMENT, "config text is null");
  return make_session(config_text, out);
}

skt_status skt_session_from_file(const char* path, skt_session** out) {
  if (path == nullptr) return fail_global(SKT_ERR_INVALID_ARGUMENT, "config path is null");
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    if (out != nullptr) *out = nullptr;
    return fail_global(SKT_ERR_IO, std::string("cannot open config '") + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return make_session(buf.str(), out);
}

void skt_session_destroy(skt_session* session) { delete session; }

skt_status skt_session_set_max_dim(skt_session* session, size_t max_dim) {
  if (session == nullptr) return fail_global(SKT_ERR_INVALID_ARGUMENT, "session is null");
  if (max_dim == 0) {
    session->last_error = "max_dim must be positive";
    return SKT_ERR_INVALID_ARGUMENT;
  }
  session->options.max_dim = max_dim;
  return SKT_OK;
}

skt_status skt_session_set_negative_controls(skt_session* session, int enabled) {
  if (session == nullptr) return fail_global(SKT_ERR_INVALID_ARGUMENT, "session is null");
  session->options.negative_controls = enabled != 0;
  return SKT_OK;
}

skt_status skt_session_set_cache_dir(skt_session* session, const char* dir) {
  if (session == nullptr || dir == nullptr) return fail_global(SKT_ERR_INVALID_ARGUMENT, "null argument");
  session->options.cache_dir = dir;
  return SKT_OK;
}

skt_status skt_session_run(skt_session* session, skt_stage stage) {
  if (session == nullptr) return fail_global(SKT_ERR_INVALID_ARGUMENT, "session is null");
  if (stage < SKT_STAGE_CHECK || stage > SKT_STAGE_REPORT) {
    session->last_error = "unknown stage";
    return SKT_ERR_INVALID_ARGUMENT;
  }
  try {
    session->options.stage = static_cast<skt::Stage>(stage);
    session->result = skt::run(session->config, session->options);
    session->last_error = session->result->error;
    return static_cast<skt_status>(session->result->exit_code);
  } catch (const std::bad_alloc&) {
    session->last_error = "out of memory";
  } catch (const std::exception& e) {
    session->last_error = std::string("internal error: ") + e.what();
  }
  session->result.reset();
  return SKT_ERR_INTERNAL;
}

const char* skt_session_report_json(skt_session* session, int include_timings) {
  if (session == nullptr || !session->result) return nullptr;
  try {
    session->json_text = include_timings ? session->result->report.dump(2)
                                         : skt::without_timings(session->result->report).dump(2);
    session->json_text += '\n';
    return session->json_text.c_str();
  } catch (const std::exception& e) {
    session->last_error = e.what();
    return nullptr;
  }
}

const char* skt_session_output_path(const skt_session* session) {
  return session == nullptr ? "" : session->config.output_path.c_str();
}

size_t skt_session_warning_count(const skt_session* session) {
  return session == nullptr || !session->result ? 0 : session->result->warnings.size();
}

const char* skt_session_warning(const skt_session* session, size_t index) {
  if (session == nullptr || !session->result || index >= session->result->warnings.size()) return nullptr;
  return session->result->warnings[index].c_str();
}

const char* skt_session_last_error(const skt_session* session) {
  return session == nullptr ? g_last_error.c_str() : session->last_error.c_str();
}

}  // extern "C"
