/*
 * Copyright 2026 The sktholo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the sktholo pipeline. A session owns one parsed config and
 * the report of its last run. Strings returned by the library stay valid
 * until the next call on the same session, or until it is destroyed. */

#ifndef SKT_SKT_H
#define SKT_SKT_H

#include <stddef.h>

#if defined(_WIN32)
#define SKT_API __declspec(dllexport)
#else
#define SKT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct skt_session skt_session;

/* Values 0-3 coincide with the CLI exit codes. */
typedef enum {
  SKT_OK = 0,
  SKT_CHECK_FAILED = 1,
  SKT_ERR_PARSE = 2,
  SKT_ERR_PRECONDITION = 3,
  SKT_ERR_INVALID_ARGUMENT = 4,
  SKT_ERR_IO = 5,
  SKT_ERR_INTERNAL = 6
} skt_status;

typedef enum {
  SKT_STAGE_CHECK = 0,
  SKT_STAGE_HOLONOMY = 1,
  SKT_STAGE_SUBMERSION = 2,
  SKT_STAGE_REPORT = 3
} skt_stage;

SKT_API const char* skt_version(void);

/* Message of the last failed call on this thread that had no session to
 * carry it (session creation, null handles). */
SKT_API const char* skt_last_error(void);

SKT_API skt_status skt_session_from_file(const char* path, skt_session** out);
SKT_API skt_status skt_session_from_string(const char* config_text, skt_session** out);
SKT_API void skt_session_destroy(skt_session* session);

/* Algebras above this dimension are refused with SKT_ERR_PRECONDITION (default 64). */
SKT_API skt_status skt_session_set_max_dim(skt_session* session, size_t max_dim);
/* Include bypassed-precondition splits in the report (default off). */
SKT_API skt_status skt_session_set_negative_controls(skt_session* session, int enabled);
/* Structure-constant cache directory; "" disables caching. Defaults to
 * $SKTHOLO_CACHE_DIR, $XDG_CACHE_HOME/sktholo or ~/.cache/sktholo. */
SKT_API skt_status skt_session_set_cache_dir(skt_session* session, const char* dir);

/* Runs the pipeline up to `stage`. Returns SKT_OK, SKT_CHECK_FAILED,
 * SKT_ERR_PARSE or SKT_ERR_PRECONDITION; a report is available for each. */
SKT_API skt_status skt_session_run(skt_session* session, skt_stage stage);

/* JSON report of the last run, pretty-printed; NULL before any run.
 * With include_timings == 0 the "timings_ms" member is left out, which makes
 * the text byte-identical across runs of the same config. */
SKT_API const char* skt_session_report_json(skt_session* session, int include_timings);

/* output.path from the config, or "" when absent. */
SKT_API const char* skt_session_output_path(const skt_session* session);

/* Number of warnings from the last run and access by index. */
SKT_API size_t skt_session_warning_count(const skt_session* session);
SKT_API const char* skt_session_warning(const skt_session* session, size_t index);

/* Error message of the last failed call on the session, "" if none. */
SKT_API const char* skt_session_last_error(const skt_session* session);

#ifdef __cplusplus
}
#endif

#endif /* SKT_SKT_H */
