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

// Command-line front end. Talks to the library exclusively through the C
// interface in secfd/secfd.h.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <string>

#include "secfd/secfd.h"

namespace {

// Exit codes: 0 success, 2 configuration problems, 3 everything else.
int exit_code(int rc) {
    if (rc == SECFD_OK) return 0;
    if (rc == SECFD_ERR_CONFIG) return 2;
    return 3;
}

int fail(int rc) {
    std::fprintf(stderr, "error: %s\n", secfd_last_error());
    return exit_code(rc);
}

struct ConfigHandle {
    secfd_config* cfg = nullptr;
    ~ConfigHandle() { secfd_config_free(cfg); }
};

struct ResultHandle {
    secfd_result* res = nullptr;
    ~ResultHandle() { secfd_result_free(res); }
};

struct ReportHandle {
    secfd_sweep_report* rep = nullptr;
    ~ReportHandle() { secfd_sweep_report_free(rep); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"secure full-duplex ISAC link simulator and beamforming designer"};
    app.set_version_flag("--version", secfd_version());
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "run the Monte Carlo sweep described by a config");
    std::string run_config;
    run->add_option("-c,--config", run_config, "scenario + sweep JSON document")->required();
    std::string run_out;
    run->add_option("-o,--out", run_out, "override the output directory");
    int run_trials = 0;
    run->add_option("--trials", run_trials, "override the trial count");
    std::uint64_t run_seed = 0;
    auto* seed_opt = run->add_option("--seed", run_seed, "override the master seed");
    std::string run_schemes;
    run->add_option("--schemes", run_schemes,
                    "comma-separated subset of proposed,without_an,no_an,isotropic_an");
    int run_jobs = 0;
    run->add_option("--jobs", run_jobs, "worker threads (cells are written in fixed order)");
    bool run_dbg = false;
    run->add_flag("--debug-solver", run_dbg, "write per-subproblem residual traces");

    auto* bp = app.add_subcommand("beampattern", "write the transmit power pattern as CSV");
    std::string bp_config;
    bp->add_option("-c,--config", bp_config, "scenario JSON document")->required();
    std::string bp_out;
    bp->add_option("-o,--out", bp_out, "output CSV path")->required();
    std::string bp_result;
    bp->add_option("--result", bp_result, "saved design result to evaluate");
    int bp_trial = 0;
    bp->add_option("--trial", bp_trial, "trial index when designing fresh");
    double bp_sr_dl = 1.0, bp_sr_ul = 1.0, bp_ismr = 1.0;
    bp->add_option("--sr-dl", bp_sr_dl, "downlink secrecy-rate target (bits/s/Hz)");
    bp->add_option("--sr-ul", bp_sr_ul, "uplink secrecy-rate target (bits/s/Hz)");
    bp->add_option("--ismr", bp_ismr, "sidelobe-to-mainlobe cap");
    std::string bp_scheme = "proposed";
    bp->add_option("--scheme", bp_scheme, "design scheme when designing fresh");
    double bp_step = 0.25;
    bp->add_option("--step", bp_step, "angular grid step in degrees");

    auto* vc = app.add_subcommand("validate-config", "parse and validate a config, then exit");
    std::string vc_config;
    vc->add_option("-c,--config", vc_config, "scenario + sweep JSON document")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (run->parsed()) {
        ConfigHandle cfg;
        int rc = secfd_config_load(run_config.c_str(), &cfg.cfg);
        if (rc != SECFD_OK) return fail(rc);
        ReportHandle rep;
        rc = secfd_sweep_run_ex(cfg.cfg, run_trials, run_seed, seed_opt->count() > 0 ? 1 : 0,
                                run_schemes.empty() ? nullptr : run_schemes.c_str(),
                                run_dbg ? 1 : 0, run_jobs,
                                run_out.empty() ? nullptr : run_out.c_str(), &rep.rep);
        if (rc != SECFD_OK) return fail(rc);
        std::printf("%s", secfd_sweep_summary(rep.rep));
        return 0;
    }

    if (bp->parsed()) {
        ConfigHandle cfg;
        int rc = secfd_config_load(bp_config.c_str(), &cfg.cfg);
        if (rc != SECFD_OK) return fail(rc);
        ResultHandle res;
        if (!bp_result.empty()) {
            rc = secfd_result_load(bp_result.c_str(), &res.res);
        } else {
            rc = secfd_design_run(cfg.cfg, bp_trial, bp_sr_dl, bp_sr_ul, bp_ismr,
                                  bp_scheme.c_str(), 0.0, &res.res);
        }
        if (rc != SECFD_OK) return fail(rc);
        rc = secfd_result_beampattern_csv(res.res, cfg.cfg, bp_step, bp_out.c_str());
        if (rc != SECFD_OK) return fail(rc);
        std::printf("status: %s\nwrote %s\n", secfd_result_status(res.res), bp_out.c_str());
        return 0;
    }

    if (vc->parsed()) {
        ConfigHandle cfg;
        const int rc = secfd_config_load(vc_config.c_str(), &cfg.cfg);
        if (rc != SECFD_OK) return fail(rc);
        std::printf("configuration ok\n");
        return 0;
    }

    return 0;
}
