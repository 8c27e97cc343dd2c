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

#include "secfd/secfd.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "harness.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

// Translates the exception taxonomy of the core into API codes.
template <typename Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const secfd::ConfigError& e) {
        set_error(e.what());
        return SECFD_ERR_CONFIG;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return SECFD_ERR_ARG;
    } catch (const std::exception& e) {
        set_error(e.what());
        return SECFD_ERR_RUNTIME;
    }
}

}  // namespace

struct secfd_config {
    secfd::SweepSpec spec;
};

struct secfd_result {
    secfd::DesignResult r;
};

struct secfd_sweep_report {
    secfd::SweepReport rep;
    std::string summary;
};

extern "C" {

const char* secfd_version(void) { return secfd::kVersion; }

const char* secfd_last_error(void) { return g_last_error.c_str(); }

int secfd_config_load(const char* path, secfd_config** out) {
    if (!path || !out) {
        set_error("null argument");
        return SECFD_ERR_ARG;
    }
    *out = nullptr;
    return guarded([&]() {
        auto* cfg = new secfd_config{secfd::sweep_from_file(path)};
        *out = cfg;
        return SECFD_OK;
    });
}

int secfd_config_parse(const char* json_text, secfd_config** out) {
    if (!json_text || !out) {
        set_error("null argument");
        return SECFD_ERR_ARG;
    }
    *out = nullptr;
    return guarded([&]() {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(json_text);
        } catch (const nlohmann::json::exception& e) {
            throw secfd::ConfigError(std::string("invalid JSON: ") + e.what());
        }
        auto* cfg = new secfd_config{secfd::sweep_from_json(j)};
        *out = cfg;
        return SECFD_OK;
    });
}

int secfd_config_validate(const secfd_config* cfg) {
    if (!cfg) {
        set_error("null argument");
        return SECFD_ERR_ARG;
    }
    return guarded([&]() {
        cfg->spec.validate();
        return SECFD_OK;
    });
}

void secfd_config_free(secfd_config* cfg) { delete cfg; }

int secfd_design_run(const secfd_config* cfg, int trial, double sr_dl_target,
                     double sr_ul_target, double ismr_max, const char* scheme,
                     double power_budget, secfd_result** out) {
    if (!cfg || !scheme || !out) {
        set_error("null argument");
        return SECFD_ERR_ARG;
    }
    *out = nullptr;
    if (trial < 0) {
        set_error("trial index must be nonnegative");
        return SECFD_ERR_ARG;
    }
    return guarded([&]() {
        const std::string sch(scheme);
        secfd::ScenarioConfig sc = cfg->spec.scenario;
        sc.seed = secfd::trial_seed(cfg->spec.scenario.seed, static_cast<std::uint64_t>(trial));
        const secfd::ChannelSet cs = secfd::generate_channels(sc);
        const secfd::Thresholds th =
            secfd::thresholds_from_targets(sc, sr_dl_target, sr_ul_target, ismr_max);
        const secfd::ScaSettings st = cfg->spec.sca;

        secfd::DesignResult r;
        if (sch == "proposed") {
            r = secfd::proposed_design(sc, cs, th, st);
        } else if (sch == "without_an") {
            r = secfd::proposed_without_an(sc, cs, th, st);
        } else if (sch == "no_an" || sch == "isotropic_an") {
            double budget = power_budget;
            if (!(budget > 0.0)) {
                const secfd::DesignResult ref = secfd::proposed_design(sc, cs, th, st);
                if (ref.status != secfd::DesignStatus::converged)
                    throw secfd::RuntimeFailure(
                        "cannot derive power budget: proposed design did not converge");
                budget = secfd::power_budget_from(ref);
            }
            r = sch == "no_an" ? secfd::no_an_design(sc, cs, th, budget, st)
                               : secfd::isotropic_an_design(sc, cs, th, budget, st);
        } else {
            throw std::invalid_argument("unknown scheme: " + sch);
        }
        r.trial = trial;
        *out = new secfd_result{std::move(r)};
        return SECFD_OK;
    });
}

int secfd_result_save(const secfd_result* r, const char* path) {
    if (!r || !path) {
        set_error("null argument");
        return SECFD_ERR_ARG;
    }
    const std::string text = secfd::result_to_json(r->r).dump(2) + "\n";
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        set_error(std::string("cannot open for writing: ") + path);
        return SECFD_ERR_IO;
    }
    out << text;
    if (!out) {
        set_error(std::string("write failed: ") + path);
        return SECFD_ERR_IO;
    }
    return SECFD_OK;
}

int secfd_result_load(const char* path, secfd_result** out) {
    if (!path || !out) {
        set_error("null argument");
        return SECFD_ERR_ARG;
    }
    *out = nullptr;
    std::ifstream in(path);
    if (!in) {
        set_error(std::string("cannot open: ") + path);
        return SECFD_ERR_IO;
    }
    return guarded([&]() {
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw secfd::RuntimeFailure(std::string("invalid result JSON: ") + e.what());
        }
        *out = new secfd_result{secfd::result_from_json(j)};
        return SECFD_OK;
    });
}

const char* secfd_result_status(const secfd_result* r) {
    return r ? secfd::to_string(r->r.status) : "";
}

const char* secfd_result_scheme(const secfd_result* r) { return r ? r->r.scheme.c_str() : ""; }

const char* secfd_result_message(const secfd_result* r) { return r ? r->r.message.c_str() : ""; }

int secfd_result_rank1_ok(const secfd_result* r) { return r && r->r.rank1_ok ? 1 : 0; }

int secfd_result_iterations(const secfd_result* r) { return r ? r->r.outer_iterations : 0; }

double secfd_result_total_power(const secfd_result* r) {
    return r ? r->r.kpis.total_power : 0.0;
}

int secfd_result_kpi(const secfd_result* r, const char* name, double* out) {
    if (!r || !name || !out) {
        set_error("null argument");
        return SECFD_ERR_ARG;
    }
    const std::string n(name);
    const secfd::RealizedKpis& kp = r->r.kpis;
    const auto indexed = [&](const char* prefix, const secfd::RVec& v, double* val) {
        const std::string pre(prefix);
        if (n.rfind(pre, 0) != 0) return false;
        int i = -1;
        if (std::sscanf(n.c_str() + pre.size(), "%d", &i) != 1) return false;
        if (i < 0 || i >= v.size()) return false;
        *val = v(i);
        return true;
    };
    double val = 0.0;
    bool found = true;
    if (n == "total_power") {
        val = kp.total_power;
    } else if (n == "ismr") {
        val = kp.ismr;
    } else if (n == "rank_ratio_max") {
        val = r->r.rank_ratio_max;
    } else if (n == "secrecy_dl_min") {
        val = kp.secrecy_dl.size() ? kp.secrecy_dl.minCoeff() : 0.0;
    } else if (n == "secrecy_ul_min") {
        val = kp.secrecy_ul.size() ? kp.secrecy_ul.minCoeff() : 0.0;
    } else if (n.rfind("sinr_eve_ul_", 0) == 0) {
        int p = -1, k = -1;
        if (std::sscanf(n.c_str(), "sinr_eve_ul_%d_%d", &p, &k) == 2 && p >= 0 &&
            p < kp.sinr_eve_ul.rows() && k >= 0 && k < kp.sinr_eve_ul.cols()) {
            val = kp.sinr_eve_ul(p, k);
        } else {
            found = false;
        }
    } else if (!indexed("sinr_eve_dl_", kp.sinr_eve_dl, &val) &&
               !indexed("sinr_dl_", kp.sinr_dl, &val) && !indexed("sinr_ul_", kp.sinr_ul, &val) &&
               !indexed("secrecy_dl_", kp.secrecy_dl, &val) &&
               !indexed("secrecy_ul_", kp.secrecy_ul, &val)) {
        found = false;
    }
    if (!found) {
        set_error("unknown kpi name: " + n);
        return SECFD_ERR_ARG;
    }
    *out = val;
    return SECFD_OK;
}

int secfd_result_trace(const secfd_result* r, const double** data, int* len) {
    if (!r || !data || !len) {
        set_error("null argument");
        return SECFD_ERR_ARG;
    }
    *data = r->r.objective_trace.data();
    *len = static_cast<int>(r->r.objective_trace.size());
    return SECFD_OK;
}

int secfd_result_beampattern_csv(const secfd_result* r, const secfd_config* cfg,
                                 double step_deg, const char* path) {
    if (!r || !cfg || !path) {
        set_error("null argument");
        return SECFD_ERR_ARG;
    }
    return guarded([&]() {
        if (r->r.vars.v_blocks.empty())
            throw std::invalid_argument("result carries no design to evaluate");
        try {
            secfd::emit_beampattern(r->r.vars, cfg->spec.scenario, step_deg, path);
        } catch (const secfd::RuntimeFailure& e) {
            set_error(e.what());
            return SECFD_ERR_IO;
        }
        return SECFD_OK;
    });
}

void secfd_result_free(secfd_result* r) { delete r; }

int secfd_sweep_run(const secfd_config* cfg, secfd_sweep_report** out) {
    return secfd_sweep_run_ex(cfg, 0, 0, 0, nullptr, 0, 0, nullptr, out);
}

int secfd_sweep_run_ex(const secfd_config* cfg, int n_trials, uint64_t seed, int has_seed,
                       const char* schemes_csv, int debug_solver, int jobs,
                       const char* out_dir, secfd_sweep_report** out) {
    if (!cfg || !out) {
        set_error("null argument");
        return SECFD_ERR_ARG;
    }
    *out = nullptr;
    return guarded([&]() {
        secfd::SweepSpec spec = cfg->spec;
        if (n_trials > 0) spec.n_trials = n_trials;
        if (has_seed) spec.scenario.seed = seed;
        if (schemes_csv) {
            spec.schemes.clear();
            std::stringstream ss(schemes_csv);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (!item.empty()) spec.schemes.push_back(item);
            }
        }
        if (debug_solver) spec.debug_solver = true;
        if (jobs > 0) spec.jobs = jobs;
        if (out_dir) spec.out_dir = out_dir;
        spec.validate();

        auto* rep = new secfd_sweep_report{secfd::run_sweep(spec), {}};
        std::string& s = rep->summary;
        char line[256];
        std::snprintf(line, sizeof(line), "cells: %d, designs: %d, converged: %d\n",
                      rep->rep.cells_total, rep->rep.results_total,
                      rep->rep.results_converged);
        s += line;
        for (const auto& fc : rep->rep.feasibility) {
            std::snprintf(line, sizeof(line),
                          "feasibility %-12s sr_target=%-6g ismr_max=%-6g  %d/%d (%.3f)\n",
                          fc.scheme.c_str(), fc.sr_target, fc.ismr_max, fc.n_converged,
                          fc.n_total, fc.rate());
            s += line;
        }
        s += "csv: " + rep->rep.csv_path + "\n";
        s += "manifest: " + rep->rep.manifest_path + "\n";
        *out = rep;
        return SECFD_OK;
    });
}

const char* secfd_sweep_csv_path(const secfd_sweep_report* rep) {
    return rep ? rep->rep.csv_path.c_str() : "";
}

const char* secfd_sweep_manifest_path(const secfd_sweep_report* rep) {
    return rep ? rep->rep.manifest_path.c_str() : "";
}

const char* secfd_sweep_summary(const secfd_sweep_report* rep) {
    return rep ? rep->summary.c_str() : "";
}

int secfd_sweep_cells(const secfd_sweep_report* rep) { return rep ? rep->rep.cells_total : 0; }

double secfd_sweep_wall_time(const secfd_sweep_report* rep) {
    return rep ? rep->rep.wall_time_s : 0.0;
}

double secfd_sweep_feasibility(const secfd_sweep_report* rep, const char* scheme,
                               double sr_target, double ismr_max) {
    if (!rep || !scheme) return -1.0;
    for (const auto& fc : rep->rep.feasibility) {
        if (fc.scheme == scheme && fc.sr_target == sr_target && fc.ismr_max == ismr_max)
            return fc.rate();
    }
    return -1.0;
}

void secfd_sweep_report_free(secfd_sweep_report* rep) { delete rep; }

}  // extern "C"
