// Copyright 2026 The genw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to genw: opaque handles, status codes, caller-freed strings.
 * Every function that can fail returns a genw_status and records a message
 * retrievable with genw_last_error() on the calling thread. */
#ifndef GENW_H_
#define GENW_H_

#include <stddef.h>
#include <stdint.h>

#if defined(GENW_BUILDING_LIBRARY)
#define GENW_API __attribute__((visibility("default")))
#else
#define GENW_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum genw_status {
  GENW_OK = 0,
  GENW_INVALID_ARGUMENT = 1,
  GENW_DOMAIN = 2,
  GENW_PARSE = 3,
  GENW_NOT_CONVERGED = 4,
  GENW_INVALID_LAURICELLA_C = 5,
  GENW_INVALID_CENTER_Q = 6,
  GENW_INVALID_CENTER_W = 7,
  GENW_INCONSISTENT_ROUTES = 8,
  GENW_INTERNAL = 9
} genw_status;

typedef struct genw_complex {
  double re;
  double im;
} genw_complex;

typedef enum genw_format { GENW_FORMAT_JSON = 0, GENW_FORMAT_CSV = 1 } genw_format;

typedef struct genw_params genw_params;
typedef struct genw_table genw_table;
typedef struct genw_radius_report genw_radius_report;

GENW_API const char* genw_status_string(genw_status status);
/* Message of the last failure on this thread; "" if none. */
GENW_API const char* genw_last_error(void);
GENW_API void genw_string_free(char* s);

/* Parameters t_1..t_m, p_1..p_m (m may be 0). */
GENW_API genw_status genw_params_create(const genw_complex* t, const genw_complex* p, size_t m,
                                        genw_params** out);
GENW_API genw_status genw_params_from_json(const char* json, genw_params** out);
GENW_API genw_status genw_params_to_json(const genw_params* params, char** out);
GENW_API size_t genw_params_size(const genw_params* params);
GENW_API void genw_params_destroy(genw_params* params);

/* f(z) = z prod (z - t_i)^{p_i} e^z */
GENW_API genw_status genw_forward_map(const genw_params* params, genw_complex z,
                                      genw_complex* out);

/* (z - t0)^{p0} prod (z - t_i)^{p_i} e^z = y  becomes
 * w prod (w - t_i')^{p_i'} e^w = argument_scale * y^root_power,
 * z = variable_scale * w + variable_shift. */
GENW_API genw_status genw_normalize_general_form(genw_complex t0, genw_complex p0,
                                                 const genw_params* params,
                                                 genw_params** params_out,
                                                 genw_complex* argument_scale,
                                                 genw_complex* root_power,
                                                 genw_complex* variable_scale,
                                                 genw_complex* variable_shift);

/* Taylor coefficients c_1..c_order of the inverse. threads = 0 uses all cores. */
GENW_API genw_status genw_table_build(const genw_params* params, unsigned order, unsigned threads,
                                      genw_table** out);
GENW_API unsigned genw_table_order(const genw_table* table);
/* n is 1-based. The plain value may overflow; the scaled form is
 * mantissa * 2^exponent. */
GENW_API genw_status genw_table_coefficient(const genw_table* table, unsigned n, genw_complex* out);
GENW_API genw_status genw_table_coefficient_scaled(const genw_table* table, unsigned n,
                                                   genw_complex* mantissa, int64_t* exponent);
GENW_API genw_status genw_table_f_value(const genw_table* table, unsigned n, genw_complex* out);
GENW_API genw_status genw_table_export(const genw_table* table, genw_format format, char** out);
GENW_API void genw_table_destroy(genw_table* table);

/* Partial sum of the first n_terms terms; n_terms = 0 means all. */
GENW_API genw_status genw_evaluate_series(const genw_table* table, genw_complex x,
                                          unsigned n_terms, genw_complex* out);

typedef struct genw_inversion {
  genw_complex z;
  double residual;
  unsigned iterations;
  int newton_polished; /* 0: the series value was already within tol */
  int converged;
  int branch_crossed;
  unsigned series_terms;
} genw_inversion;

GENW_API genw_status genw_newton_invert(const genw_params* params, genw_complex w,
                                        genw_complex z0, double tol, unsigned max_iter,
                                        genw_inversion* out);
/* W^(p)(w) on the branch through 0, seeded from the table's series. */
GENW_API genw_status genw_generalized_w(const genw_table* table, genw_complex w, double tol,
                                        unsigned max_iter, genw_inversion* out);

/* Root-test radius fitted over n in [lo, hi]. */
GENW_API genw_status genw_empirical_radius(const genw_table* table, unsigned lo, unsigned hi,
                                           int envelope, int log_correction, double* out);

GENW_API genw_status genw_radius_report_create(const genw_params* params, unsigned order,
                                               genw_radius_report** out);
GENW_API genw_status genw_radius_report_from_table(const genw_table* table,
                                                   genw_radius_report** out);
GENW_API double genw_radius_report_empirical(const genw_radius_report* report);
/* Conjectured R of the best-matching candidate, or NaN when there is none. */
GENW_API double genw_radius_report_best(const genw_radius_report* report);
GENW_API double genw_radius_report_relative_gap(const genw_radius_report* report);
GENW_API int genw_radius_report_matched(const genw_radius_report* report);
GENW_API size_t genw_radius_report_saddle_count(const genw_radius_report* report);
/* lambda must have room for m entries. */
GENW_API genw_status genw_radius_report_saddle(const genw_radius_report* report, size_t index,
                                               genw_complex* lambda);
GENW_API genw_status genw_radius_report_export(const genw_radius_report* report,
                                               genw_format format, char** out);
/* CSV with columns n, log_abs_c, n_log_inv_R. */
GENW_API genw_status genw_radius_report_plot_csv(const genw_radius_report* report, char** out);
GENW_API void genw_radius_report_destroy(genw_radius_report* report);

/* Randomized identity and brute-force checks. *all_passed is set to 0 when any
 * case fails; the status is still GENW_OK. */
GENW_API genw_status genw_verify(uint64_t seed, genw_format format, char** out, int* all_passed);

/* Exact against asymptotic a_n(k) for each order. lambda may be NULL. */
GENW_API genw_status genw_asymptotics(const genw_params* params, const double* lambda,
                                      size_t lambda_len, const unsigned* orders, size_t n_orders,
                                      genw_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* GENW_H_ */
