/*
 * Copyright 2026 The qduality Authors
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

/* C interface to the qduality library.
 *
 * Objects are opaque handles created by qd_*_create/load/experiment calls and
 * released with the matching qd_*_free. Every fallible call returns a
 * qd_status; on failure qd_last_error() describes the problem until the next
 * failing call on the same thread.
 *
 * Complex numbers are passed as interleaved (re, im) doubles. Matrices are
 * row-major, so entry (r, c) of a d x d matrix sits at offset 2 * (r * d + c).
 * A NULL basis means the computational basis. A NULL orders array means the
 * default Tsallis orders {1, 2}.
 */

#ifndef QDUALITY_QDUALITY_H
#define QDUALITY_QDUALITY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QD_API __declspec(dllexport)
#else
#define QD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qd_status {
  QD_OK = 0,
  QD_ERR_DIMENSION = 1,
  QD_ERR_INVALID_STATE = 2,
  QD_ERR_NON_HERMITIAN = 3,
  QD_ERR_IMPOSSIBLE_OUTCOME = 4,
  QD_ERR_SINGULAR_STATE = 5,
  QD_ERR_INVALID_ARGUMENT = 6,
  QD_ERR_PARSE = 7,
  QD_ERR_INTERNAL = 8
} qd_status;

typedef struct qd_state qd_state;
typedef struct qd_basis qd_basis;
typedef struct qd_report qd_report;

QD_API const char* qd_version(void);
QD_API const char* qd_last_error(void);
QD_API const char* qd_status_name(qd_status status);
QD_API void qd_string_free(char* s);

/* Density matrices */
QD_API qd_status qd_state_from_matrix(size_t dim, const double* entries,
                                      const size_t* dims, size_t ndims,
                                      double tol, qd_state** out);
QD_API qd_status qd_state_from_amplitudes(size_t dim, const double* amplitudes,
                                          const size_t* dims, size_t ndims,
                                          qd_state** out);
QD_API qd_status qd_state_from_json(const char* text, qd_state** out);
QD_API qd_status qd_state_load(const char* path, qd_state** out);
QD_API void qd_state_free(qd_state* state);
QD_API size_t qd_state_dim(const qd_state* state);
/* Writes 2 * dim * dim doubles. */
QD_API qd_status qd_state_entries(const qd_state* state, double* out);
QD_API qd_status qd_state_to_json(const qd_state* state, char** out);

/* Reference observables */
QD_API qd_status qd_basis_computational(size_t dim, qd_basis** out);
/* Vector k occupies entries [2 * dim * k, 2 * dim * (k + 1)). */
QD_API qd_status qd_basis_from_vectors(size_t dim, const double* vectors,
                                       qd_basis** out);
QD_API qd_status qd_basis_from_json(const char* text, qd_basis** out);
QD_API qd_status qd_basis_load(const char* path, qd_basis** out);
QD_API void qd_basis_free(qd_basis* basis);

/* Maps and measures */
QD_API qd_status qd_dephase(const qd_state* state, const qd_basis* basis,
                            qd_state** out);
QD_API qd_status qd_tsallis_entropy(const qd_state* state, double q,
                                    double* out);
QD_API qd_status qd_max_entropy(size_t dim, double q, double* out);
QD_API qd_status qd_wavelike_info(const qd_state* state, const qd_basis* basis,
                                  double q, double* out);
QD_API qd_status qd_wavelike_upper_bound(const qd_state* state,
                                         const qd_basis* basis, double q,
                                         double* out);
QD_API qd_status qd_particlelike_info(const qd_state* state,
                                      const qd_basis* basis, double q,
                                      double* out);
/* W = k_B T I(rho); boltzmann_k = 1 and temperature = 1 is natural units. */
QD_API qd_status qd_work(const qd_state* state, double temperature,
                         double boltzmann_k, double* out);
QD_API qd_status qd_demon_work_gap(const qd_state* state, const qd_basis* basis,
                                   double temperature, double boltzmann_k,
                                   double* out);

/* Two-qubit quantities; the state must have dimension 4. */
QD_API qd_status qd_chsh(const qd_state* state, double* b_max, double* n_l);
QD_API qd_status qd_chsh_bruteforce(const qd_state* state, int restarts,
                                    int iterations, uint64_t seed,
                                    double* out);
QD_API qd_status qd_concurrence(const qd_state* state, double* out);

/* Reports */
QD_API qd_status qd_measures(const qd_state* state, const qd_basis* basis,
                             double q, qd_report** out);
QD_API qd_status qd_experiment_mzi(double phi, int bs2_present,
                                   const double* orders, size_t n_orders,
                                   qd_report** out);
QD_API qd_status qd_experiment_dce(double bs2_alpha, double phi,
                                   const double* orders, size_t n_orders,
                                   qd_report** out);
QD_API qd_status qd_experiment_wave_detector(double x, double alpha_re,
                                             double alpha_im, double beta_re,
                                             double beta_im,
                                             const double* orders,
                                             size_t n_orders, qd_report** out);
/* alice_outcome < 0 selects Bob's (unread) perspective. */
QD_API qd_status qd_experiment_measurement_model(const double* amplitudes,
                                                 size_t n, long alice_outcome,
                                                 const double* orders,
                                                 size_t n_orders,
                                                 qd_report** out);
QD_API qd_status qd_experiment_morphing(double alpha_re, double alpha_im,
                                        double beta_re, double beta_im,
                                        double eta, const double* orders,
                                        size_t n_orders, qd_report** out);

QD_API void qd_report_free(qd_report* report);
QD_API size_t qd_report_scalar_count(const qd_report* report);
/* Borrowed pointer, valid while the report lives. */
QD_API const char* qd_report_scalar_name(const qd_report* report, size_t i);
QD_API double qd_report_scalar_value(const qd_report* report, size_t i);
QD_API qd_status qd_report_scalar(const qd_report* report, const char* name,
                                  double* out);
QD_API qd_status qd_report_to_json(const qd_report* report, char** out);

/* Runs every built-in check. text_out receives the text (or JSON when
 * as_json != 0) summary; all_passed is set to 1 iff every check passed. */
QD_API qd_status qd_verify(double perturbation, int as_json, char** text_out,
                           int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* QDUALITY_QDUALITY_H */
