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

#include "benchmarks.hpp"

#include <cmath>
#include <cstdio>

namespace secfd {

DesignResult proposed_design(const ScenarioConfig& cfg, const ChannelSet& cs,
                             const Thresholds& th, const ScaSettings& settings) {
    AssembleOptions opts;
    DesignResult r = run_design(cfg, cs, th, opts, settings);
    r.scheme = "proposed";
    return r;
}

DesignResult proposed_without_an(const ScenarioConfig& cfg, const ChannelSet& cs,
                                 const Thresholds& th, const ScaSettings& settings) {
    AssembleOptions opts;
    opts.with_an = false;
    DesignResult r = run_design(cfg, cs, th, opts, settings);
    r.scheme = "without_an";
    return r;
}

DesignResult no_an_design(const ScenarioConfig& cfg, const ChannelSet& cs, const Thresholds& th,
                          double power_budget, const ScaSettings& settings) {
    if (!(power_budget > 0.0)) throw std::invalid_argument("no_an_design: budget must be positive");
    AssembleOptions opts;
    opts.with_an = false;
    opts.with_ismr = false;
    opts.power_budget = power_budget;
    DesignResult r = run_design(cfg, cs, th, opts, settings);
    r.scheme = "no_an";
    return r;
}

DesignResult isotropic_an_design(const ScenarioConfig& cfg, const ChannelSet& cs,
                                 const Thresholds& th, double power_budget,
                                 const ScaSettings& settings) {
    if (!(power_budget > 0.0))
        throw std::invalid_argument("isotropic_an_design: budget must be positive");
    AssembleOptions comm_only;
    comm_only.with_an = false;
    comm_only.with_eve = false;
    comm_only.with_ismr = false;
    DesignResult r = run_design(cfg, cs, th, comm_only, settings);
    r.scheme = "isotropic_an";
    if (r.status != DesignStatus::converged) return r;

    const double comm_power = r.vars.total_power();
    if (power_budget < comm_power * (1.0 - 1e-9)) {
        r.status = DesignStatus::infeasible;
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "budget %.6g below communication-only power %.6g", power_budget,
                      comm_power);
        r.message = buf;
        return r;
    }

    const double spare = std::max(0.0, power_budget - comm_power);
    r.vars.w_cov = (spare / cfg.n_tx) * CMat::Identity(cfg.n_tx, cfg.n_tx);
    const CMat q = r.vars.q_total();
    for (int k = 0; k < cfg.n_ul; ++k)
        r.vars.u_rx.col(k) = ul_beamformer(k, q, r.vars.p_ul, cs, cfg);
    r.objective_trace.push_back(r.vars.total_power());
    r.kpis = realized_kpis(r.vars, cs, cfg);
    return r;
}

double power_budget_from(const DesignResult& reference) {
    if (reference.status != DesignStatus::converged)
        throw RuntimeFailure("power_budget_from: reference design did not converge");
    return reference.kpis.total_power;
}

}  // namespace secfd
