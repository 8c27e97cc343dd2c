/* SPDX-License-Identifier: Apache-2.0
 *
 * secfd - link-level simulator and beamforming designer for secure
 * full-duplex integrated sensing and communication
 * Copyright (C) 2026 the secfd authors
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

/* C interface of the secfd library. All functions return SECFD_OK or an
 * error code; on error, secfd_last_error() describes the failure for the
 * calling thread. Handles are opaque and must be released with the
 * matching *_free function. */

#ifndef SECFD_SECFD_H
#define SECFD_SECFD_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define SECFD_OK 0
#define SECFD_ERR_CONFIG 2  /* malformed or invalid configuration */
#define SECFD_ERR_RUNTIME 3 /* numerical or internal failure */
#define SECFD_ERR_ARG 4     /* bad argument to an API call */
#define SECFD_ERR_IO 5      /* file could not be read or written */

typedef struct secfd_config secfd_config;
typedef struct secfd_result secfd_result;
typedef struct secfd_sweep_report secfd_sweep_report;

/* Library semantic version, e.g. "0.1.0". */
const char* secfd_version(void);

/* Message of the last failure on this thread; empty string if none. */
const char* secfd_last_error(void);

/* Configuration documents hold a scenario plus an optional sweep section.
 * Parsing validates everything and fails with SECFD_ERR_CONFIG. */
int secfd_config_load(const char* path, secfd_config** out);
int secfd_config_parse(const char* json_text, secfd_config** out);
int secfd_config_validate(const secfd_config* cfg);
void secfd_config_free(secfd_config* cfg);

/* Runs one design on the channels of the given trial index.
 * scheme: "proposed", "without_an", "no_an", or "isotropic_an".
 * power_budget pins the total power of the matched-power schemes; pass a
 * nonpositive value to derive the budget from an internal proposed run. */
int secfd_design_run(const secfd_config* cfg, int trial, double sr_dl_target,
                     double sr_ul_target, double ismr_max, const char* scheme,
                     double power_budget, secfd_result** out);

int secfd_result_save(const secfd_result* r, const char* path);
int secfd_result_load(const char* path, secfd_result** out);

/* "converged", "infeasible", "iteration_limit", or "solver_failure". */
const char* secfd_result_status(const secfd_result* r);
const char* secfd_result_scheme(const secfd_result* r);
const char* secfd_result_message(const secfd_result* r);
int secfd_result_rank1_ok(const secfd_result* r);
int secfd_result_iterations(const secfd_result* r);
double secfd_result_total_power(const secfd_result* r);

/* Scalar performance figures by name: "total_power", "ismr",
 * "rank_ratio_max", "secrecy_dl_min", "secrecy_ul_min", and the indexed
 * families "sinr_dl_<l>", "secrecy_dl_<l>", "sinr_ul_<k>",
 * "secrecy_ul_<k>", "sinr_eve_dl_<p>", "sinr_eve_ul_<p>_<k>". */
int secfd_result_kpi(const secfd_result* r, const char* name, double* out);

/* Objective value after each outer step; the pointer stays valid while the
 * result handle lives. */
int secfd_result_trace(const secfd_result* r, const double** data, int* len);

/* Transmit power pattern over [-90, 90] degrees written as CSV. */
int secfd_result_beampattern_csv(const secfd_result* r, const secfd_config* cfg,
                                 double step_deg, const char* path);
void secfd_result_free(secfd_result* r);

/* Monte Carlo sweep over the grid in the config's sweep section. */
int secfd_sweep_run(const secfd_config* cfg, secfd_sweep_report** out);

/* Same with command-line style overrides: n_trials > 0 replaces the trial
 * count, has_seed != 0 installs seed, schemes_csv is a comma-separated
 * scheme list (NULL keeps the config), jobs > 0 replaces the worker count,
 * out_dir (non-NULL) replaces the output directory, debug_solver != 0
 * enables per-subproblem residual traces. */
int secfd_sweep_run_ex(const secfd_config* cfg, int n_trials, uint64_t seed, int has_seed,
                       const char* schemes_csv, int debug_solver, int jobs,
                       const char* out_dir, secfd_sweep_report** out);

const char* secfd_sweep_csv_path(const secfd_sweep_report* rep);
const char* secfd_sweep_manifest_path(const secfd_sweep_report* rep);
const char* secfd_sweep_summary(const secfd_sweep_report* rep);
int secfd_sweep_cells(const secfd_sweep_report* rep);
double secfd_sweep_wall_time(const secfd_sweep_report* rep);

/* Feasibility rate of one grid cell; negative if the cell is absent. */
double secfd_sweep_feasibility(const secfd_sweep_report* rep, const char* scheme,
                               double sr_target, double ismr_max);
void secfd_sweep_report_free(secfd_sweep_report* rep);

#ifdef __cplusplus
}
#endif

#endif /* SECFD_SECFD_H */
