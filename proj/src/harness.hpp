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

#include <string>
#include <vector>

#include "benchmarks.hpp"

namespace secfd {

// Monte Carlo sweep description. Secrecy-rate targets apply to both the
// downlink and uplink users of a cell.
struct SweepSpec {
    ScenarioConfig scenario;
    std::vector<double> sr_targets{1.0};
    std::vector<double> ismr_values{1.0};
    int n_trials = 1;
    std::vector<std::string> schemes{"proposed"};
    std::string out_dir = "sweep_out";
    int jobs = 1;
    bool debug_solver = false;
    ScaSettings sca;

    void validate() const;
};

// Parses the optional "sweep" section of a scenario document; the rest of
// the document is the scenario itself.
SweepSpec sweep_from_json(const nlohmann::json& j);
SweepSpec sweep_from_file(const std::string& path);

struct FeasibilityCell {
    std::string scheme;
    double sr_target = 0.0;
    double ismr_max = 0.0;
    int n_total = 0;
    int n_converged = 0;

    double rate() const { return n_total > 0 ? double(n_converged) / n_total : 0.0; }
};

struct SweepReport {
    std::string out_dir;
    std::string csv_path;
    std::string schema_path;
    std::string manifest_path;
    int cells_total = 0;
    int results_total = 0;
    int results_converged = 0;
    double wall_time_s = 0.0;
    std::vector<FeasibilityCell> feasibility;
};

// Runs the whole grid (targets x ismr caps x trials x schemes), writes one
// wide CSV plus its schema, a JSON manifest, and per-design result/trace
// files under out_dir/cells. Trial t draws its channels from
// trial_seed(scenario.seed, t), so rows are reproducible cell by cell and
// independent of the number of worker threads.
SweepReport run_sweep(const SweepSpec& spec);

// Fraction of designs that converged.
double feasibility_rate(const std::vector<DesignResult>& results);

// Transmit power pattern over [-90, 90] degrees written as
// "theta_deg,power" rows.
void emit_beampattern(const DesignVariables& dv, const ScenarioConfig& cfg, double step_deg,
                      const std::string& path);

}  // namespace secfd
