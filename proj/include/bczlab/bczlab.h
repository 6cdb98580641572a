/*
   Copyright 2026 The bczlab Authors

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


/*
 * bczlab C API.
 *
 * Every function returns a bcz_status; on failure the calling thread's last
 * error message is available from bcz_last_error(). Handles are opaque and
 * owned by the caller, who releases them with the matching *_free function.
 * Strings returned by getters stay valid until the owning handle is freed.
 *
 * Numbers are passed as text: "p/q", integers and decimals are accepted in
 * both modes. With exact != 0 they are read as exact rationals.
 */

#ifndef BCZLAB_BCZLAB_H_
#define BCZLAB_BCZLAB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(BCZLAB_BUILDING)
#define BCZ_API __declspec(dllexport)
#else
#define BCZ_API __declspec(dllimport)
#endif
#else
#define BCZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bcz_status {
  BCZ_OK = 0,
  BCZ_ERR_DOMAIN = 1,
  BCZ_ERR_COPRIMALITY = 2,
  BCZ_ERR_SEARCH_CEILING = 3,
  BCZ_ERR_ITERATION_CEILING = 4,
  BCZ_ERR_CRITERION_MISMATCH = 5,
  BCZ_ERR_SLOPE_COINCIDENCE = 6,
  BCZ_ERR_ORDER = 7,
  BCZ_ERR_CONFIG = 8,
  BCZ_ERR_INVALID_ARGUMENT = 9,
  BCZ_ERR_INTERNAL = 10
} bcz_status;

typedef enum bcz_region {
  BCZ_REGION_OMEGA = 0,
  BCZ_REGION_OMEGA_B = 1,
  BCZ_REGION_HALF_SECTION = 2
} bcz_region;

typedef enum bcz_observable {
  BCZ_OBS_ZERO = 0,
  BCZ_OBS_ONE = 1,
  BCZ_OBS_EXP_S = 2,
  BCZ_OBS_EXP_ST = 3,
  BCZ_OBS_IND_HALF = 4
} bcz_observable;

typedef enum bcz_claim { BCZ_CLAIM_F1 = 0, BCZ_CLAIM_F2_EXCESS = 1 } bcz_claim;

typedef struct bcz_experiment_spec {
  double a;
  double b;
  uint64_t samples;
  uint64_t seed;
  bcz_region region;
} bcz_experiment_spec;

typedef struct bcz_orbit bcz_orbit;
typedef struct bcz_point_list bcz_point_list;
typedef struct bcz_report bcz_report;
typedef struct bcz_series bcz_series;
typedef struct bcz_verdict bcz_verdict;

BCZ_API const char* bcz_version(void);
BCZ_API const char* bcz_status_name(bcz_status status);
/* Message of the last failure on this thread, "" if none. */
BCZ_API const char* bcz_last_error(void);

/* Defaults: a = 0.25, b = 1e-3, samples = 1e5, seed = 1, whole triangle. */
BCZ_API bcz_experiment_spec bcz_experiment_spec_default(void);

/* ---- orbits ---------------------------------------------------------- */

/* steps + 1 points starting at (s, t). */
BCZ_API bcz_status bcz_orbit_compute(const char* s, const char* t, uint64_t steps, int exact,
                                     bcz_orbit** out);
/* Exact orbit of (1/q, 1), one full period. */
BCZ_API bcz_status bcz_farey_orbit(uint64_t q, bcz_orbit** out);
BCZ_API void bcz_orbit_free(bcz_orbit* orbit);
BCZ_API size_t bcz_orbit_size(const bcz_orbit* orbit);
BCZ_API int bcz_orbit_is_exact(const bcz_orbit* orbit);
/* Returns 1 and sets *period when a period was detected (exact mode). */
BCZ_API int bcz_orbit_period(const bcz_orbit* orbit, uint64_t* period);
BCZ_API bcz_status bcz_orbit_point(const bcz_orbit* orbit, size_t i, double* s, double* t);
/* Exact mode: reduced numerators and denominators as decimal strings. */
BCZ_API bcz_status bcz_orbit_point_exact(const bcz_orbit* orbit, size_t i, const char** s_num,
                                         const char** s_den, const char** t_num,
                                         const char** t_den);

/* ---- lattice --------------------------------------------------------- */

/* Primitive points with x in (x_lo, x_hi] and slope <= slope_max, in slope order. */
BCZ_API bcz_status bcz_enumerate_primitive(const char* s, const char* t, int exact,
                                           const char* x_lo, const char* x_hi,
                                           const char* slope_max, bcz_point_list** out);
BCZ_API void bcz_point_list_free(bcz_point_list* list);
BCZ_API size_t bcz_point_list_size(const bcz_point_list* list);
BCZ_API bcz_status bcz_point_list_get(const bcz_point_list* list, size_t i, int64_t* m,
                                      int64_t* n, double* x, double* y, double* slope);
/* Exact text of x, y and slope ("p/q"); NULL outputs are skipped. */
BCZ_API bcz_status bcz_point_list_get_text(const bcz_point_list* list, size_t i,
                                           const char** x, const char** y, const char** slope);

/* Primitive points with x in (x_lo, x_hi] and 0 < y <= y_max. */
BCZ_API bcz_status bcz_box_count(const char* s, const char* t, int exact, const char* x_lo,
                                 const char* x_hi, const char* y_max, uint64_t* count);

/* n-th smallest slope among points with x in (0, x_max]. text may be NULL;
 * otherwise up to text_len bytes of the value ("p/q" or a decimal) are written. */
BCZ_API bcz_status bcz_nth_slope(const char* s, const char* t, int exact, uint64_t n,
                                 const char* x_max, double* value, char* text, size_t text_len);

/* ---- renormalization ------------------------------------------------- */

/* Applies phi_b (inverse != 0: its inverse). Results are written as text. */
BCZ_API bcz_status bcz_phi(const char* s, const char* t, const char* b, int exact, int inverse,
                           char* s_out, size_t s_len, char* t_out, size_t t_len);

/* Number of Phi steps until the n-th visit to Omega_b after the start. */
BCZ_API bcz_status bcz_return_index(const char* s, const char* t, const char* b, int exact,
                                    uint64_t n, uint64_t* total_steps, double* land_s,
                                    double* land_t);

/* Evaluates the plus-one event by iteration and by lattice counting. */
BCZ_API bcz_status bcz_plus_one_event(const char* s, const char* t, const char* b, int exact,
                                      uint64_t n, int* event);

/* ---- statistics ------------------------------------------------------ */

BCZ_API bcz_status bcz_claim_integral(bcz_claim which, const bcz_experiment_spec* spec,
                                      bcz_report** out);
BCZ_API bcz_status bcz_g0_fraction(const bcz_experiment_spec* spec, bcz_report** out);
BCZ_API bcz_status bcz_plus_one_fraction(const bcz_experiment_spec* spec, bcz_report** out);
/* skewed != 0 draws from the s^2-biased sampler (negative control). */
BCZ_API bcz_status bcz_invariance_test(const bcz_experiment_spec* spec, uint32_t bins,
                                       uint32_t iterates, int skewed, bcz_report** out);

BCZ_API void bcz_report_free(bcz_report* report);
BCZ_API const char* bcz_report_name(const bcz_report* report);
BCZ_API double bcz_report_estimate(const bcz_report* report);
BCZ_API double bcz_report_stderr(const bcz_report* report);
BCZ_API double bcz_report_threshold(const bcz_report* report);
/* 1 when the estimate must be at least the threshold, 0 for at most. */
BCZ_API int bcz_report_at_least(const bcz_report* report);
BCZ_API int bcz_report_pass(const bcz_report* report);
BCZ_API uint64_t bcz_report_samples(const bcz_report* report);
BCZ_API double bcz_report_wall_seconds(const bcz_report* report);
BCZ_API bcz_experiment_spec bcz_report_spec(const bcz_report* report);
BCZ_API size_t bcz_report_extra_count(const bcz_report* report);
BCZ_API const char* bcz_report_extra_key(const bcz_report* report, size_t i);
BCZ_API double bcz_report_extra_value(const bcz_report* report, size_t i);

/* i-th uniform sample from a region; depends only on (seed, i). */
BCZ_API bcz_status bcz_sample_point(bcz_region region, double b, uint64_t seed, uint64_t i,
                                    double* s, double* t);
BCZ_API bcz_status bcz_birkhoff_slope_rate(const char* s, const char* t, int exact, uint64_t n,
                                           const char* x_max, double* rate);
BCZ_API bcz_status bcz_coprime_density(int64_t m, double* density);

/* ---- mixing ---------------------------------------------------------- */

/* Running Cesaro averages of |C_h| for h = 1..lags. */
BCZ_API bcz_status bcz_correlation_cesaro(bcz_observable f, bcz_observable g, const char* s,
                                          const char* t, int exact, uint64_t n, uint64_t lags,
                                          bcz_series** out, int* decaying);
/* Max over theta = k/theta_count, k < theta_count, of the normalized Weyl sum. */
BCZ_API bcz_status bcz_weyl_scan(bcz_observable f, int centered, const char* s, const char* t,
                                 int exact, uint64_t n, uint64_t theta_count,
                                 double* max_magnitude, double* argmax_theta);
BCZ_API void bcz_series_free(bcz_series* series);
BCZ_API size_t bcz_series_size(const bcz_series* series);
BCZ_API const double* bcz_series_data(const bcz_series* series);

/* ---- acceptance suite ------------------------------------------------ */

BCZ_API size_t bcz_verify_count(void);
/* Criterion id at position i, or -1 when out of range. */
BCZ_API int bcz_verify_id(size_t i);
BCZ_API bcz_status bcz_verify_run(int id, bcz_verdict** out);

typedef void (*bcz_verdict_callback)(const bcz_verdict* verdict, void* user);
/* Runs every criterion in order, calling back after each; *all_pass is the AND. */
BCZ_API bcz_status bcz_verify_run_suite(bcz_verdict_callback callback, void* user,
                                        int* all_pass);

BCZ_API void bcz_verdict_free(bcz_verdict* verdict);
BCZ_API int bcz_verdict_id(const bcz_verdict* verdict);
BCZ_API const char* bcz_verdict_title(const bcz_verdict* verdict);
BCZ_API int bcz_verdict_pass(const bcz_verdict* verdict);
BCZ_API const char* bcz_verdict_detail(const bcz_verdict* verdict);
BCZ_API double bcz_verdict_seconds(const bcz_verdict* verdict);

#ifdef __cplusplus
}
#endif

#endif /* BCZLAB_BCZLAB_H_ */
