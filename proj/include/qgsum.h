/* Copyright 2026 The qgsum Authors
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

/* C interface to the qgsum simulator: exact simulation of Clifford + C3
 * circuits as sums of local-Clifford-decorated graph states.
 *
 * All functions return QGS_OK or an error code; qgs_last_error() holds a
 * thread-local message for the most recent failure.  Handles are opaque and
 * owned by the caller via the matching _free function.  Strings returned as
 * char* are heap-allocated and released with qgs_string_free.
 */

#ifndef QGSUM_H
#define QGSUM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qgs_circuit qgs_circuit;
typedef struct qgs_result qgs_result;

enum {
  QGS_OK = 0,
  QGS_ERR_PARSE = 1,    /* malformed circuit text */
  QGS_ERR_BADARG = 2,   /* null handle or invalid argument */
  QGS_ERR_CAP = 3,      /* dense oracle cap exceeded */
  QGS_ERR_OVERFLOW = 4, /* coefficient left the 64-bit range */
  QGS_ERR_INTERNAL = 5
};

typedef struct qgs_run_options {
  int no_merge;    /* skip merging after C3 gates */
  int verify;      /* replay the circuit on the dense oracle */
  int amplitudes;  /* include an amplitude dump in reports */
  int oracle_cap;  /* max qubits for dense work (default 16) */
} qgs_run_options;

typedef struct qgs_bench_options {
  const int* qubit_counts;
  size_t num_qubit_counts;
  const int* degrees;
  size_t num_degrees;
  int reps;
  uint64_t seed;
  const char* gate; /* "T", "CS", "CH", "CCX", "CCZ" or "CSWAP" */
} qgs_bench_options;

const char* qgs_version(void);

/* Message for the most recent error on this thread; empty when none. */
const char* qgs_last_error(void);

void qgs_run_options_init(qgs_run_options* opts);
void qgs_bench_options_init(qgs_bench_options* opts);

int qgs_circuit_parse(const char* text, qgs_circuit** out);
void qgs_circuit_free(qgs_circuit* c);
int qgs_circuit_num_qubits(const qgs_circuit* c);
long long qgs_circuit_num_gates(const qgs_circuit* c);

int qgs_run(const qgs_circuit* c, const qgs_run_options* opts,
            qgs_result** out);
void qgs_result_free(qgs_result* r);

long long qgs_result_num_terms(const qgs_result* r);
long long qgs_result_peak_terms(const qgs_result* r);
long long qgs_result_merge_count(const qgs_result* r);
long long qgs_result_cancellation_count(const qgs_result* r);
/* 1 = verified, 0 = verification failed, -1 = not requested. */
int qgs_result_verified(const qgs_result* r);

/* NULL on failure (see qgs_last_error). */
char* qgs_result_report_json(const qgs_result* r);
char* qgs_result_report_text(const qgs_result* r);

int qgs_bench(const qgs_bench_options* opts, char** json_out,
              char** text_out);

void qgs_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* QGSUM_H */
