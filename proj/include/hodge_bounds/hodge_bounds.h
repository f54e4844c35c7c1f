// Copyright 2026 The hodge-bounds Authors
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


/* C interface to the hodge-bounds engine. Every call returns an hb_status;
 * on failure hb_last_error() holds a message for the calling thread. Strings
 * returned through char** are owned by the caller and released with
 * hb_string_free. */

#ifndef HODGE_BOUNDS_H
#define HODGE_BOUNDS_H

#include <stddef.h>

#if defined(_WIN32)
#define HB_API __declspec(dllexport)
#else
#define HB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hb_status {
  HB_OK = 0,
  HB_ERR_INVALID_ARGUMENT = 1,
  HB_ERR_PARSE = 2,
  HB_ERR_SYMMETRY = 3,
  HB_ERR_HYPOTHESIS = 4,
  HB_ERR_INAPPLICABLE = 5,
  HB_ERR_SEARCH_LIMIT = 6,
  HB_ERR_NOT_QUADRATIC = 7,
  HB_ERR_MISMATCH = 8,
  HB_ERR_UNASSIGNED = 9,
  HB_ERR_INTERNAL = 99
} hb_status;

typedef enum hb_format {
  HB_FORMAT_JSON = 0,
  HB_FORMAT_TEXT = 1,
  HB_FORMAT_LATEX = 2,
  HB_FORMAT_TSV = 3
} hb_format;

typedef struct hb_profile hb_profile;
typedef struct hb_catalog hb_catalog;
typedef struct hb_diamond hb_diamond;

HB_API const char* hb_version(void);
HB_API const char* hb_status_name(hb_status status);
/* Message of the last failed call on this thread, "" if none. */
HB_API const char* hb_last_error(void);
HB_API void hb_string_free(char* s);

/* m is "inf" or an integer in [1, d]. */
HB_API hb_status hb_profile_new(int d, int q, const char* m, hb_profile** out);
HB_API hb_status hb_profile_set_albanese(hb_profile* pf, int k, int f);
HB_API void hb_profile_free(hb_profile* pf);

/* Negative caps mean min(q-1, 12); negative only_p means every p.
 * second_order overrides both caps with 2. */
typedef struct hb_catalog_options {
  int order_cap;
  int schur_cap;
  int only_p;
  int second_order;
  int rank_floors;
} hb_catalog_options;

HB_API void hb_catalog_options_default(hb_catalog_options* opts);
HB_API hb_status hb_catalog_generate(const hb_profile* pf, const hb_catalog_options* opts, hb_catalog** out);
HB_API hb_status hb_catalog_parse_json(const char* text, hb_catalog** out);
/* JSON, TEXT or LATEX. */
HB_API hb_status hb_catalog_render(const hb_catalog* cat, hb_format format, char** out);
HB_API size_t hb_catalog_size(const hb_catalog* cat);
HB_API void hb_catalog_free(hb_catalog* cat);

HB_API hb_status hb_diamond_parse_json(const char* text, hb_diamond** out);
HB_API hb_status hb_diamond_abelian(int d, hb_diamond** out);
HB_API int hb_diamond_dimension(const hb_diamond* dm);
/* Decimal value of entry (p, j); HB_ERR_UNASSIGNED when it is free. */
HB_API hb_status hb_diamond_entry(const hb_diamond* dm, int p, int j, char** out);
HB_API hb_status hb_diamond_render_json(const hb_diamond* dm, char** out);
/* HB_ERR_SYMMETRY when a symmetry, h^{0,0} or q check fails; messages gets
 * one line per violation either way. */
HB_API hb_status hb_diamond_validate(const hb_diamond* dm, const hb_profile* pf, char** messages);
HB_API void hb_diamond_free(hb_diamond* dm);

/* feasible is set to 1 or 0. JSON or TEXT. */
HB_API hb_status hb_check(const hb_diamond* dm, const hb_catalog* cat, hb_format format, int* feasible,
                          char** report);

/* Solves one constraint for target. The constraint is the catalog entry
 * tagged source, or expr read as "expr >= 0" when source is NULL. A NULL
 * target picks the constraint's lead entry. */
HB_API hb_status hb_solve(const hb_catalog* cat, const char* source, const char* expr, const char* target,
                          hb_format format, char** out);

typedef struct hb_minimize_options {
  long long ceiling; /* <= 0: environment or 10^7 */
  int radius;        /* < 0: automatic */
  int verify;
} hb_minimize_options;

HB_API void hb_minimize_options_default(hb_minimize_options* opts);
/* fixed is a JSON object such as {"h02": 7} or NULL. JSON or TEXT. */
HB_API hb_status hb_minimize(const hb_catalog* cat, const char* target, const char* fixed,
                             const hb_minimize_options* opts, hb_format format, char** out);
/* TSV or JSON table over q_values. */
HB_API hb_status hb_asymptotic(int d, const char* m, const char* target, const int* q_values, size_t count,
                               const hb_catalog_options* copts, const hb_minimize_options* mopts, hb_format format,
                               char** out);

/* kind is "gamma", "delta" or "epsilon"; order <= 0 means q. JSON or TEXT. */
HB_API hb_status hb_series(const hb_profile* pf, const char* kind, int p, int order, hb_format format, char** out);

/* mismatches receives the number of MISMATCH rows. TSV or JSON. */
HB_API hb_status hb_reproduce(hb_format format, int* mismatches, char** out);

HB_API hb_status hb_regularity(int d, int p, int k, int f, int* out);

#ifdef __cplusplus
}
#endif

#endif /* HODGE_BOUNDS_H */
