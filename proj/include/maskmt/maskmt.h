// Copyright 2026 The maskmt Authors
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

/* C interface to libmaskmt.
 *
 * Every function returns a maskmt_status. On failure a message is available
 * from maskmt_last_error() on the calling thread until the next call.
 * Strings returned through `char** out` are owned by the caller and must be
 * released with maskmt_string_free(). Structured results are JSON.
 */

#ifndef MASKMT_MASKMT_H_
#define MASKMT_MASKMT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(MASKMT_BUILDING_LIBRARY)
#define MASKMT_API __attribute__((visibility("default")))
#else
#define MASKMT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum maskmt_status {
  MASKMT_OK = 0,
  MASKMT_INVALID_ARGUMENT = 1,
  MASKMT_NOT_FOUND = 2,
  MASKMT_ENGINE = 3, /* engine unreachable or protocol error */
  MASKMT_IO = 4,
  MASKMT_STATE = 5, /* missing dictionary, wrong order of calls */
  MASKMT_INTERNAL = 6,
} maskmt_status;

typedef struct maskmt_context maskmt_context;
typedef struct maskmt_server maskmt_server;

MASKMT_API const char* maskmt_version(void);
MASKMT_API const char* maskmt_last_error(void);
MASKMT_API const char* maskmt_status_name(maskmt_status status);
MASKMT_API void maskmt_string_free(char* s);

/* Built-in offline context: engine "mock-en-fr" and fixture dictionaries. */
MASKMT_API maskmt_status maskmt_context_create_fixture(maskmt_context** out);
/* From a JSON config file. MASKMT_SEED overrides the configured seed. */
MASKMT_API maskmt_status maskmt_context_create_from_config(
    const char* config_path, maskmt_context** out);
MASKMT_API void maskmt_context_destroy(maskmt_context* ctx);

MASKMT_API maskmt_status maskmt_set_seed(maskmt_context* ctx, uint64_t seed);
MASKMT_API maskmt_status maskmt_load_pos_lexicon(maskmt_context* ctx,
                                                 const char* path);
MASKMT_API maskmt_status maskmt_open_audit_log(maskmt_context* ctx,
                                               const char* path);
/* Registers an engine from one JSON engine entry (config file syntax). */
MASKMT_API maskmt_status maskmt_register_engine(maskmt_context* ctx,
                                                const char* engine_json);
MASKMT_API maskmt_status maskmt_engines_json(maskmt_context* ctx, char** out);

/* Loads a dictionary TSV into the slot of its mode. */
MASKMT_API maskmt_status maskmt_load_dictionary(maskmt_context* ctx,
                                                const char* path);
/* options: {"engine", "corpus": [..] | "corpus_path", "vocab": [..] |
 * "vocab_path", "mode", "samples_per_word", "base_samples", "seed",
 * "alpha", "top_k", "min_support", "max_in_flight", "out"}. Installs the
 * result and writes it to "out" when given. Result: {entries, vocab_size,
 * mode}. */
MASKMT_API maskmt_status maskmt_build_dictionary(maskmt_context* ctx,
                                                 const char* options_json,
                                                 char** out_json);
MASKMT_API maskmt_status maskmt_dictionary_stats_json(maskmt_context* ctx,
                                                      char** out);

/* params: {"method", "ratio", "beta"?, "seed"?}. */
MASKMT_API maskmt_status maskmt_encode(maskmt_context* ctx, const char* text,
                                       const char* params_json,
                                       char** out_json);
MASKMT_API maskmt_status maskmt_translate(maskmt_context* ctx,
                                          const char* engine_id,
                                          const char* text, char** out_text);
/* history: {"source_len", "records": [...]}, or any object holding it under
 * "history" (an encode result or a session export). */
MASKMT_API maskmt_status maskmt_decode(maskmt_context* ctx, const char* y_pub,
                                       const char* history_json,
                                       char** out_json);
/* params as for encode plus "engine". Result joins the encode and decode
 * results with "y_pub". */
MASKMT_API maskmt_status maskmt_run(maskmt_context* ctx, const char* text,
                                    const char* params_json, char** out_json);

/* options: {"mechanism": prism_r|prism_star|no_decode|mixed, "grid": [..],
 * "docs", "seed", "engine", "beta"?}. Result: curve CSV. */
MASKMT_API maskmt_status maskmt_eval_sweep(maskmt_context* ctx,
                                           const char* options_json,
                                           char** out_csv);
MASKMT_API maskmt_status maskmt_aupqc_csv(const char* csv, double* out);
MASKMT_API maskmt_status maskmt_qs_at_csv(const char* csv, double p,
                                          double* out, int* extrapolated);
/* ps_json: array of privacy levels. Result: report JSON. */
MASKMT_API maskmt_status maskmt_report_json(const char* csv,
                                            const char* mechanism,
                                            const char* engine,
                                            const char* ps_json, char** out);

MASKMT_API maskmt_status maskmt_audit_json(maskmt_context* ctx, char** out);

MASKMT_API maskmt_status maskmt_epsilon_for(double ratio, size_t vocab_size,
                                            double* out);
MASKMT_API maskmt_status maskmt_ratio_for_epsilon(double epsilon,
                                                  size_t vocab_size,
                                                  double* out);

/* HTTP service. `ctx` must outlive the server. A NULL bind_address or
 * session_dir and a negative port fall back to the context's config; port 0
 * picks a free port. */
MASKMT_API maskmt_status maskmt_server_start(maskmt_context* ctx,
                                             const char* bind_address,
                                             int port,
                                             const char* session_dir,
                                             maskmt_server** out,
                                             int* bound_port);
/* Address the server listens on; owned by the server. */
MASKMT_API const char* maskmt_server_bind_address(const maskmt_server* server);
MASKMT_API void maskmt_server_wait(maskmt_server* server);
MASKMT_API void maskmt_server_stop(maskmt_server* server);
MASKMT_API void maskmt_server_destroy(maskmt_server* server);

#ifdef __cplusplus
}
#endif

#endif /* MASKMT_MASKMT_H_ */
