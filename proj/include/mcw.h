/*
 *  Copyright 2026 the mcw developers
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */

/* C interface of the mcw shared library.
 *
 * All structured data crosses this boundary as JSON text (the same schemas
 * the CLI reads and writes); parsed objects live behind opaque handles.
 * Every function returns MCW_OK or an error code; mcw_last_error() gives a
 * human-readable message for the most recent failure on the calling thread.
 * Strings returned through out-parameters are heap-allocated and must be
 * released with mcw_string_free().
 */

#ifndef MCW_H
#define MCW_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mcw_status {
  MCW_OK = 0,
  MCW_ERROR_PARSE = 1,
  MCW_ERROR_VALIDATION = 2,
  MCW_ERROR_OVERFLOW = 3,       /* expansion guard tripped */
  MCW_ERROR_TOO_LARGE = 4,      /* oracle/search cap exceeded */
  MCW_ERROR_PRECONDITION = 5,
  MCW_ERROR_DIVISION_BY_ZERO = 6,
  MCW_ERROR_MISSING_ASSIGNMENT = 7,
  MCW_ERROR_SHAPE = 8,
  MCW_ERROR_INVARIANT = 9,
  MCW_ERROR_INVALID_ARGUMENT = 10,
  MCW_ERROR_INTERNAL = 11
} mcw_status;

typedef struct mcw_circuit mcw_circuit;       /* plain or quantified circuit */
typedef struct mcw_polynomial mcw_polynomial;
typedef struct mcw_abp mcw_abp;

typedef struct mcw_guards {
  long max_terms;         /* term-count guard, default 200000 */
  long max_total_degree;  /* total-degree guard, default 64 */
  long max_prefix_length; /* quantifier prefix guard, default 24 */
} mcw_guards;

void mcw_guards_default(mcw_guards* out);

const char* mcw_status_name(mcw_status s);
/* message of the last failure on this thread; empty string if none */
const char* mcw_last_error(void);
void mcw_string_free(char* s);

/* ---- parsing and serialization ---- */

mcw_status mcw_circuit_parse(const char* json, mcw_circuit** out);
mcw_status mcw_circuit_to_json(const mcw_circuit* c, char** json_out);
void mcw_circuit_free(mcw_circuit* c);

mcw_status mcw_polynomial_parse(const char* json, mcw_polynomial** out);
mcw_status mcw_polynomial_to_json(const mcw_polynomial* p, char** json_out);
void mcw_polynomial_free(mcw_polynomial* p);

mcw_status mcw_abp_parse(const char* json, mcw_abp** out);
mcw_status mcw_abp_to_json(const mcw_abp* a, char** json_out);
void mcw_abp_free(mcw_abp* a);

/* ---- circuit queries and semantics ---- */

int mcw_circuit_is_quantified(const mcw_circuit* c);
long mcw_circuit_size(const mcw_circuit* c);
/* report lists the violations; status is MCW_OK even when invalid */
mcw_status mcw_circuit_validate(const mcw_circuit* c, char** report_json);

/* expansion: a polynomial JSON array, one entry per output (quantified
 * circuits expand to a single polynomial) */
mcw_status mcw_circuit_expand(const mcw_circuit* c, const mcw_guards* guards, char** json_out);
/* exact evaluation at a rational point: assignment {"x1": "2", ...} */
mcw_status mcw_circuit_eval(const mcw_circuit* c, const char* assignment_json, char** values_json);

/* ---- transformations ---- */

mcw_status mcw_lower_to_projections(const mcw_circuit* c, mcw_circuit** out);
mcw_status mcw_extract_hom_component(const mcw_circuit* c, long k, mcw_circuit** out,
                                     char** stats_json);
/* exponential sums serialize as quantified circuits with an all-sum prefix */
mcw_status mcw_expsum_from_homogeneous(const mcw_circuit* qc, const mcw_guards* guards,
                                       char** expsum_json);
mcw_status mcw_expsum_trivial(const mcw_circuit* qc, const mcw_guards* guards, char** expsum_json);
mcw_status mcw_expsum_pruned(const mcw_circuit* qc, const mcw_guards* guards, char** pruned_json);
mcw_status mcw_perm_projection_circuit(int n, mcw_circuit** out);
mcw_status mcw_permanent_polynomial(int n, mcw_polynomial** out);
mcw_status mcw_support_preservation_report(const mcw_circuit* qc, const mcw_guards* guards,
                                           char** report_json);

/* ---- succinct ABPs ---- */

mcw_status mcw_abp_expand(const mcw_abp* a, const mcw_guards* guards, char** poly_json);
/* degree_bound < 0 uses deg_x of the expansion */
mcw_status mcw_abp_expsum(const mcw_abp* a, long degree_bound, const mcw_guards* guards,
                          char** expsum_json);
mcw_status mcw_abp_length_check(const mcw_abp* a, const mcw_guards* guards, char** report_json);

/* ---- Newton polytope shadows ---- */

/* samples == 0: exhaustive over entries in [-K, K] subject to the budget;
 * samples > 0: seeded random matrices */
mcw_status mcw_shadow_search(const mcw_polynomial* p, long entry_bound, long budget, long samples,
                             unsigned long long seed, char** report_json);
/* witness_matrix_json may be NULL to delegate to the search */
mcw_status mcw_transparency_verdict(const mcw_polynomial* p, const char* witness_matrix_json,
                                    long entry_bound, long budget, char** report_json);
mcw_status mcw_shadow_vertex_count(const mcw_polynomial* p, const char* matrix_json,
                                   long* count_out);
/* SVG plot of the projection from an existing shadow report */
mcw_status mcw_shadow_svg(const mcw_polynomial* p, const char* report_json, char** svg_out);

/* ---- self test ---- */

/* runs the acceptance suite; writes the pass/fail table and returns MCW_OK
 * only if every criterion passed */
mcw_status mcw_selftest(unsigned long long seed, char** report_text);

#ifdef __cplusplus
}
#endif

#endif /* MCW_H */
