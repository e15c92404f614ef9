/*
   Copyright 2026 The mahler-gauge authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/* C interface to the measure / discriminant / energy gauge.
 *
 * Conventions:
 *   - Every function returns an mg_status; MG_OK means the computation
 *     finished (a checked inequality may still have failed; look at the
 *     report or the holds_out flag).
 *   - On any non-MG_OK return, mg_last_error() carries a message for
 *     the calling thread, valid until its next API call.
 *   - Structured results come back as JSON in freshly allocated
 *     strings; release them with mg_string_free.  Output pointers may
 *     be NULL when the caller does not want that artifact.
 *   - precision arguments are in bits; pass 0 for the default (128).
 *     Checks escalate internally up to the 4096-bit cap before
 *     reporting MG_ERR_PRECISION.
 */

#ifndef MAHLERGAUGE_H
#define MAHLERGAUGE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mg_status {
  MG_OK = 0,
  MG_ERR_INTERNAL = 1,   /* unexpected failure; see mg_last_error */
  MG_ERR_PARSE = 2,      /* malformed polynomial, rational, or JSON */
  MG_ERR_HYPOTHESIS = 3, /* input violates a theorem hypothesis */
  MG_ERR_DOMAIN = 4,     /* input outside the operation's domain */
  MG_ERR_PRECISION = 5,  /* undecided at the precision cap */
  MG_ERR_BUDGET = 6      /* enumeration or iteration budget exhausted */
} mg_status;

typedef struct mg_poly mg_poly;   /* integer polynomial */
typedef struct mg_field mg_field; /* order in a number field */

const char* mg_version(void);
long mg_default_precision(void);

/* Message for the most recent failing call in this thread ("" if none). */
const char* mg_last_error(void);

void mg_string_free(char* s);

/* ---- polynomials ---- */

/* Signed integer-coefficient expressions in one variable x, e.g.
 * "x^3-2x+1" or "3x^2-2". */
mg_status mg_poly_parse(const char* text, mg_poly** out);
void mg_poly_free(mg_poly* p);
mg_status mg_poly_to_text(const mg_poly* p, char** out);
int mg_poly_degree(const mg_poly* p);

/* Certified Mahler measure.  JSON: {"value": {...}, "l1_lower": ...,
 * "l1_upper": ..., "roots": [...]}. */
mg_status mg_measure(const mg_poly* p, long precision, char** json_out);

/* Inequality checks on one polynomial.  which:
 *   "mahler"  classical measure-vs-discriminant bound, equality case
 *             characterized;
 *   "paired"  the sharpened bound for equal-modulus-paired roots;
 *   "l1"      the coefficient-norm window around the measure;
 *   "cor15"   the reversed bounds: discriminant against the coefficient
 *             norm (paired form plus the hypothesis-free companion).
 * r_text: optional rational pairing threshold ("" or NULL derives it).
 * JSON is an array of reports; *holds_out is 1 iff every verdict in the
 * array is a certified pass. */
mg_status mg_check(const mg_poly* p, const char* which, const char* r_text,
                   long precision, char** json_out, int* holds_out);

/* ---- point configurations ---- */

/* config_json: {"k": int, "points": [[...], ...]}, entries integers,
 * decimals, or rational strings.  Output: {"report": ..., "trace": ...,
 * "pairing": ..., "trivial_zero": ...}. */
mg_status mg_energy_check(const char* config_json, const char* r_text,
                          long precision, char** json_out, int* holds_out);

/* ---- number fields ---- */

/* spec_json: {"poly": "x^2+1", "basis": [[...]]?, "disc": int?,
 * "name": "..."?}.  The basis rows are over the power basis; omitted
 * basis means the full power-basis order. */
mg_status mg_field_from_spec(const char* spec_json, mg_field** out);
void mg_field_free(mg_field* k);

/* {"poly", "degree", "real_embeddings", "conjugate_pairs", "disc",
 * "field_disc"?, "power_basis", "covolume"} */
mg_status mg_field_info(const mg_field* k, char** json_out);

/* Box search for verified generators, one per requested T.
 * T_csv: comma-separated rationals, strictly increasing.
 * c_text: fixed box side ("" or NULL chooses it automatically).
 * real_variant: 0 puts the large coordinate on a conjugate pair,
 * nonzero on a real embedding.
 * JSON: {"c": ..., "records": [...], "notices": [...]}. */
mg_status mg_field_search_generators(const mg_field* k, const char* T_csv,
                                     const char* c_text, int real_variant,
                                     char** json_out);

/* Exact minimum of the measure over generators of the order, searched
 * up to measure T_max (integer text).  An empty result ("found": false)
 * certifies the minimum exceeds T_max. */
mg_status mg_field_min_measure(const mg_field* k, const char* T_max_text,
                               char** json_out);

/* Every field-level bound applicable to the signature, evaluated at the
 * rational measure value M_text. */
mg_status mg_field_check_bounds(const mg_field* k, const char* M_text,
                                long precision, char** json_out,
                                int* holds_out);

/* ---- reproduction suites ---- */

/* which: "all", "identities", "inequalities", "energy", or "fields".
 * Deterministic for fixed (which, seed, precision); json_out gets the
 * full report, csv_out the fixed-column summary
 * (suite, check, lhs, rhs, holds, slack). */
mg_status mg_repro(const char* which, unsigned long long seed, long precision,
                   char** json_out, char** csv_out, int* holds_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MAHLERGAUGE_H */
