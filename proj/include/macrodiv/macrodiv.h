// SPDX-License-Identifier: Apache-2.0
//
// macrodiv: macro-diversity and signal-strength variability simulator
// Copyright (C) 2026 The macrodiv authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#ifndef MACRODIV_MACRODIV_H
#define MACRODIV_MACRODIV_H

/* C interface to the macrodiv simulator.
 *
 * All functions return an md_status. On failure the message for the calling
 * thread is available through md_last_error() until the next call on that
 * thread. Strings returned through `char**` out-parameters are owned by the
 * caller and released with md_string_free(). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MACRODIV_BUILDING)
#    define MD_API __declspec(dllexport)
#  else
#    define MD_API __declspec(dllimport)
#  endif
#else
#  define MD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum md_status {
    MD_OK = 0,
    MD_ERR_CONFIG = 2,   /* invalid configuration or argument */
    MD_ERR_NUMERIC = 3,  /* degenerate or non-finite result */
    MD_ERR_IO = 4,       /* file system failure */
    MD_ERR_INTERNAL = 5
} md_status;

typedef struct md_config md_config;
typedef struct md_report md_report;

MD_API const char* md_version(void);
MD_API const char* md_last_error(void);
MD_API void md_string_free(char* s);

/* Config documents are flat JSON objects; an empty string gives the
 * defaults. */
MD_API md_status md_config_load(const char* text, md_config** out);
MD_API md_status md_config_load_file(const char* path, md_config** out);
MD_API void md_config_free(md_config* config);

/* Overrides one field. `json_value` is a JSON literal (e.g. "16", "\"grid\"",
 * "[1,4]"); "null" removes the field; a bare word that is not valid JSON is taken as a string. The
 * whole config is revalidated and left unchanged on failure. */
MD_API md_status md_config_set(md_config* config, const char* key, const char* json_value);

/* 1 if the loaded document or an override sets `key`, else 0. */
MD_API int md_config_has_key(const md_config* config, const char* key);

/* Canonical JSON with every field resolved. */
MD_API md_status md_config_to_json(const md_config* config, char** out);

/* One CSV row per AP: "x,y,z,S" with a header line. */
MD_API md_status md_layout_csv(const md_config* config, char** out);

/* Closed-form expected gain (linear and dB) at the configured position,
 * plus the analytic coefficient of variation. Any out pointer may be NULL. */
MD_API md_status md_closed_form(const md_config* config, double* mean_linear, double* mean_db, double* cv);

/* Per-AP closed-form terms as CSV: "ap,distance_m,antennas,contribution_linear,contribution_db". */
MD_API md_status md_closed_form_csv(const md_config* config, char** out);

/* threads == 0 uses all hardware threads; results do not depend on it. */
MD_API md_status md_run_scenario(const md_config* config, unsigned threads, md_report** out);
MD_API void md_report_free(md_report* report);
MD_API md_status md_report_json(const md_report* report, char** out);
MD_API md_status md_report_summary(const md_report* report, char** out);
MD_API md_status md_report_write(const md_report* report, const char* dir);

/* Writes tableI..IV.csv and fig2a, fig2b, fig3a, fig3b.csv into `dir`. */
MD_API md_status md_reproduce(uint64_t seed, uint64_t trials, unsigned threads, const char* dir, char** summary);

#ifdef __cplusplus
}
#endif

#endif /* MACRODIV_MACRODIV_H */
