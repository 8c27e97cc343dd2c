// SPDX-License-Identifier: Apache-2.0
//
// secfd - link-level simulator and beamforming designer for secure
// full-duplex integrated sensing and communication
// Copyright (C) 2026 the secfd authors
//
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

#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "solver.hpp"
#include "subproblem.hpp"

namespace secfd {

// MMSE receive beamformer for uplink user k against the interference
// covariance induced by (Q, p). Returned with unit norm; the uplink SINR is
// invariant to the scale.
CVec ul_beamformer(int k, const CMat& q, const RVec& p, const ChannelSet& cs,
                   const ScenarioConfig& cfg);

// Maps secrecy-rate targets (bits/s/Hz, applied to every served user) to
// SINR floors, using the configured eavesdropper SINR ceilings: a user
// floor of (1 + cap) 2^target - 1 together with the ceiling guarantees the
// secrecy target against every eavesdropper.
Thresholds thresholds_from_targets(const ScenarioConfig& cfg, double sr_dl_target,
                                   double sr_ul_target, double ismr_max);

enum class DesignStatus { converged, infeasible, iteration_limit, solver_failure };

const char* to_string(DesignStatus s);

struct ScaSettings {
    int max_outer = 40;
    double obj_tol = 1e-5;        // relative objective decrease threshold
    double restore_tol = 1e-6;    // relative slack for the exact-KPI check
    double rank_tol = 1e-5;       // ratio of second to first eigenvalue
    SolverSettings solver;
};

// Exact performance of a finished design, evaluated with MMSE receive
// beamformers recomputed from the final covariances.
struct RealizedKpis {
    RVec sinr_dl;      // L
    RVec sinr_ul;      // K
    RVec sinr_eve_dl;  // P
    RMat sinr_eve_ul;  // P x K
    RVec secrecy_dl;   // L, worst case over eavesdroppers
    RVec secrecy_ul;   // K, worst case over eavesdroppers
    double ismr = 0.0;
    double total_power = 0.0;
};

struct DesignResult {
    DesignStatus status = DesignStatus::solver_failure;
    DesignVariables vars;
    RealizedKpis kpis;
    int outer_iterations = 0;
    std::vector<double> objective_trace;  // true total power after each outer step
    bool rank1_ok = false;
    double rank_ratio_max = 0.0;
    std::string message;
    std::string scheme = "proposed";
    int trial = 0;
};

RealizedKpis realized_kpis(const DesignVariables& dv, const ChannelSet& cs,
                           const ScenarioConfig& cfg, const LobeMatrices* lm = nullptr);

// Successive convex approximation around interference anchors. Each outer
// step solves one conic subproblem (warm started from the previous one),
// re-anchors at the solution, and is declared converged only when the
// objective has settled and the exact KPIs of the iterate meet every
// threshold within restore_tol.
DesignResult run_design(const ScenarioConfig& cfg, const ChannelSet& cs, const Thresholds& th,
                        const AssembleOptions& opts = {}, const ScaSettings& settings = {});

// Leading eigenpair extraction of a PSD matrix that is rank one up to
// rank_tol; the largest-magnitude entry is rotated to the positive real
// axis. Throws RuntimeFailure when the ratio test fails.
CVec extract_rank1(const CMat& v, double rank_tol = 1e-5);

nlohmann::json result_to_json(const DesignResult& r);
DesignResult result_from_json(const nlohmann::json& j);

}  // namespace secfd
