/* Copyright 2026 The ghzpurify Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the ghzpurify library.
 *
 * Ensembles are opaque handles owned by the caller and released with
 * ghzp_ensemble_free. Every fallible call returns a ghzp_status; on failure
 * ghzp_last_error() describes the problem (thread-local, valid until the
 * next call on the same thread). Strings returned through char** are
 * heap-allocated and released with ghzp_string_free.
 *
 * Error patterns are unsigned integers: party k (0 = A) is bit (n-1-k), and
 * canonical patterns have the leading bit clear. Ensemble weights are stored
 * densely, index = canonical pattern, 2^(n-1) entries.
 */
#ifndef GHZPURIFY_GHZPURIFY_H
#define GHZPURIFY_GHZPURIFY_H

#include <stddef.h>
#include <stdint.h>

#if defined(GHZP_BUILDING_LIBRARY)
#define GHZP_API __attribute__((visibility("default")))
#else
#define GHZP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ghzp_status {
    GHZP_OK = 0,
    GHZP_E_INVALID_ARITY = 1,
    GHZP_E_INVALID_ARGUMENT = 2,
    GHZP_E_DEGENERATE_BRANCH = 3,
    GHZP_E_CONTRACT_VIOLATION = 4,
    GHZP_E_INVALID_SUBSET = 5,
    GHZP_E_TOPOLOGY = 6,
    GHZP_E_SIZE_CAP = 7,
    GHZP_E_PARSE = 8,
    GHZP_E_VALIDATION = 9,
    GHZP_E_INFEASIBLE = 10,
    GHZP_E_IO = 11,
    GHZP_E_INTERNAL = 12
} ghzp_status;

typedef struct ghzp_ensemble ghzp_ensemble;

typedef struct ghzp_phase_ensemble {
    int n;
    double p0;
} ghzp_phase_ensemble;

GHZP_API const char *ghzp_status_string(ghzp_status status);
GHZP_API const char *ghzp_last_error(void);
GHZP_API void ghzp_string_free(char *s);

/* ---- ensembles ---- */

/* `weights` has 2^(n-1) entries summing to 1 within 1e-9 (renormalized). */
GHZP_API ghzp_status ghzp_ensemble_create(int n, const double *weights, size_t count, ghzp_ensemble **out);
GHZP_API ghzp_status ghzp_ensemble_symmetric(int n, double f0, ghzp_ensemble **out);
GHZP_API ghzp_status ghzp_ensemble_from_json(const char *json, ghzp_ensemble **out);
GHZP_API ghzp_status ghzp_ensemble_to_json(const ghzp_ensemble *e, char **out);
GHZP_API void ghzp_ensemble_free(ghzp_ensemble *e);
GHZP_API int ghzp_ensemble_n(const ghzp_ensemble *e);
GHZP_API size_t ghzp_ensemble_size(const ghzp_ensemble *e);
/* Copies up to `count` weights; returns the number available. */
GHZP_API size_t ghzp_ensemble_weights(const ghzp_ensemble *e, double *out, size_t count);
/* Party labels (0 = A). Copies up to `count`; returns n. */
GHZP_API size_t ghzp_ensemble_parties(const ghzp_ensemble *e, int *out, size_t count);
/* Replaces the party labels (sorted, distinct, n of them). */
GHZP_API ghzp_status ghzp_ensemble_set_parties(ghzp_ensemble *e, const int *parties, size_t count);

/* ---- patterns ---- */

GHZP_API ghzp_status ghzp_canonicalize(int n, uint32_t raw, uint32_t *out);
GHZP_API ghzp_status ghzp_parity_class(int n, uint32_t e, uint32_t f, uint32_t *out);
/* Writes n 'e'/'o' characters plus a terminator; `buf` needs n+1 bytes. */
GHZP_API ghzp_status ghzp_parity_label(int n, uint32_t cls, char *buf, size_t buf_size);
GHZP_API ghzp_status ghzp_single_flip_index(int n, int party, uint32_t *out);
GHZP_API ghzp_status ghzp_relabel(const ghzp_ensemble *e, uint32_t flips, ghzp_ensemble **out);
GHZP_API ghzp_status ghzp_argmax_to_zero(const ghzp_ensemble *e, ghzp_ensemble **out, uint32_t *mask);

/* ---- bit-flip purification ---- */

GHZP_API ghzp_status ghzp_purify_identity(const ghzp_ensemble *r1, const ghzp_ensemble *r2, double *probability,
                                          ghzp_ensemble **out);
GHZP_API ghzp_status ghzp_cross_residual(const ghzp_ensemble *r1, const ghzp_ensemble *r2, uint32_t cls,
                                         double *probability, ghzp_ensemble **out);
GHZP_API ghzp_status ghzp_second_round(const ghzp_ensemble *a, const ghzp_ensemble *b, double *probability,
                                       ghzp_ensemble **out);
GHZP_API ghzp_status ghzp_identity_improves(const ghzp_ensemble *r1, const ghzp_ensemble *r2, int *out);
GHZP_API ghzp_status ghzp_residual_improves(const ghzp_ensemble *r1, const ghzp_ensemble *r2, int *out);
GHZP_API ghzp_status ghzp_three_choices(int n, double f1, double f2, int *choice, double *value);

/* ---- subsystems and links ---- */

GHZP_API ghzp_status ghzp_extract_subsystem(const ghzp_ensemble *r1, const ghzp_ensemble *r2, uint32_t cls,
                                            const int *keep, size_t keep_count, double *probability,
                                            ghzp_ensemble **out);
/* Copies up to `count` local party positions; `*written` receives the size. */
GHZP_API ghzp_status ghzp_default_keep(const ghzp_ensemble *r1, const ghzp_ensemble *r2, uint32_t cls, int *out,
                                       size_t count, size_t *written);
GHZP_API ghzp_status ghzp_entanglement_link(const ghzp_ensemble *a, const ghzp_ensemble *b, double *probability,
                                            ghzp_ensemble **out);
GHZP_API ghzp_status ghzp_link_improves(double f1, double f2, int *out);
GHZP_API ghzp_status ghzp_nprime_range(int n, int *lo, int *hi);

/* ---- phase-flip purification ---- */

/* {"n": 3, "p0": 0.8} */
GHZP_API ghzp_status ghzp_phase_from_json(const char *json, ghzp_phase_ensemble *out);
GHZP_API ghzp_status ghzp_phase_identity(ghzp_phase_ensemble r1, ghzp_phase_ensemble r2, double *probability,
                                         ghzp_phase_ensemble *out);
GHZP_API ghzp_status ghzp_phase_residual(ghzp_phase_ensemble r1, ghzp_phase_ensemble r2, double *probability,
                                         ghzp_phase_ensemble *out);
GHZP_API ghzp_status ghzp_phase_second_round(ghzp_phase_ensemble r, double *probability, ghzp_phase_ensemble *out);
GHZP_API ghzp_status ghzp_phase_residual_improves(double p1, double p2, int *out);

/* ---- yields, averages, comparisons ---- */

#define GHZP_MAX_COMPONENTS 8

typedef struct ghzp_component {
    char label[16];
    double probability;
    double fidelity; /* NaN on zero-probability branches */
} ghzp_component;

typedef struct ghzp_scheme_report {
    char scheme[8];
    double yield;
    double average_fidelity;
    int component_count;
    ghzp_component components[GHZP_MAX_COMPONENTS];
} ghzp_scheme_report;

typedef enum ghzp_preferred { GHZP_PREFER_P1 = 0, GHZP_PREFER_P1PRIME = 1, GHZP_PREFER_TIE = 2 } ghzp_preferred;

GHZP_API ghzp_status ghzp_p1_report(double f1, double f2, ghzp_scheme_report *out);
GHZP_API ghzp_status ghzp_p1prime_report(double f1, double f2, ghzp_scheme_report *out);
GHZP_API ghzp_status ghzp_compare_schemes(double f1, double f2, int rounds, ghzp_preferred *out);
GHZP_API ghzp_status ghzp_multiround_tradeoff(double f1, double f2, int rounds, double *f_triple, double *f_t);
/* Predicate ids: eq7 fig3 fig4-fprime fig4-ft fig5-choice fig6-fdprime
 * fig6-ftprime fig7 fig8 fig9 fig10 fig11 fig12. `*defined` is 0 where the
 * value does not exist. */
GHZP_API ghzp_status ghzp_region_value(const char *predicate, double f1, double f2, int rounds, double *value,
                                       int *defined);
GHZP_API ghzp_status ghzp_region_sweep_csv(const char *predicate, double f1_min, double f1_max, int f1_steps,
                                           double f2_min, double f2_max, int f2_steps, int rounds, char **csv);

/* ---- step reports ---- */

/* Scheme ids: p1-identity p1-branches p1prime p1-link p2-identity
 * p2-residual p2-second. Bit-flip schemes read r1/r2, phase schemes read
 * p1/p2 (pass NULL for the unused pair). JSON output; with `exact` set the
 * calculation runs in rational arithmetic and values are "p/q" strings. */
GHZP_API ghzp_status ghzp_step(const char *scheme, const ghzp_ensemble *r1, const ghzp_ensemble *r2,
                               const ghzp_phase_ensemble *p1, const ghzp_phase_ensemble *p2, int exact, char **json);
/* Exact step from JSON documents (ensembles or phase ensembles). */
GHZP_API ghzp_status ghzp_step_json(const char *scheme, const char *in1, const char *in2, int exact, char **json);

/* ---- oracle verification ---- */

#define GHZP_VERIFY_EXACT 1u
#define GHZP_VERIFY_INJECT_FAULT 2u

/* `ns` lists the photon counts (2..5). `*passed` is 1 when every deviation
 * is within 1e-12 (exactly 0 in exact mode). */
GHZP_API ghzp_status ghzp_verify(const int *ns, size_t ns_count, unsigned flags, char **csv, int *passed);

/* ---- planner ---- */

typedef struct ghzp_plan_options {
    double target;
    int max_rounds;
    const char *objective; /* "fidelity-first" (default) or "yield-first" */
    const char *scope;     /* "all" (default) or "recycle" */
} ghzp_plan_options;

/* Returns GHZP_OK with the plan JSON even when infeasible; `*feasible`
 * tells the two apart. */
GHZP_API ghzp_status ghzp_plan_bitflip(const ghzp_ensemble *r1, const ghzp_ensemble *r2,
                                       const ghzp_plan_options *opts, char **json, int *feasible);
GHZP_API ghzp_status ghzp_plan_phase(ghzp_phase_ensemble p1, ghzp_phase_ensemble p2, const ghzp_plan_options *opts,
                                     char **json, int *feasible);

#ifdef __cplusplus
}
#endif

#endif /* GHZPURIFY_GHZPURIFY_H */
