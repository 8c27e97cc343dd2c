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

#include "harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <thread>

namespace secfd {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const std::vector<std::string>& canonical_schemes() {
    static const std::vector<std::string> order{"proposed", "without_an", "no_an",
                                                "isotropic_an"};
    return order;
}

std::string fmt_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

double at_or_zero(const RVec& v, int i) { return i < v.size() ? v(i) : 0.0; }

double at_or_zero(const RMat& m, int i, int j) {
    return (i < m.rows() && j < m.cols()) ? m(i, j) : 0.0;
}

struct Column {
    std::string name;
    std::string type;  // "number", "integer", "string"
};

std::vector<Column> csv_columns(const ScenarioConfig& cfg) {
    std::vector<Column> cols{{"sr_target", "number"},    {"ismr_max", "number"},
                             {"trial", "integer"},       {"seed", "integer"},
                             {"scheme", "string"},       {"status", "string"},
                             {"outer_iterations", "integer"}, {"total_power", "number"},
                             {"an_power", "number"},     {"rank1_ok", "integer"},
                             {"rank_ratio_max", "number"}, {"ismr_realized", "number"}};
    for (int l = 0; l < cfg.n_dl; ++l) cols.push_back({"sinr_dl_" + std::to_string(l), "number"});
    for (int l = 0; l < cfg.n_dl; ++l)
        cols.push_back({"secrecy_dl_" + std::to_string(l), "number"});
    for (int k = 0; k < cfg.n_ul; ++k) cols.push_back({"sinr_ul_" + std::to_string(k), "number"});
    for (int k = 0; k < cfg.n_ul; ++k)
        cols.push_back({"secrecy_ul_" + std::to_string(k), "number"});
    for (int p = 0; p < cfg.n_eve; ++p)
        cols.push_back({"sinr_eve_dl_" + std::to_string(p), "number"});
    for (int p = 0; p < cfg.n_eve; ++p)
        for (int k = 0; k < cfg.n_ul; ++k)
            cols.push_back(
                {"sinr_eve_ul_" + std::to_string(p) + "_" + std::to_string(k), "number"});
    return cols;
}

std::string csv_row(const ScenarioConfig& cfg, double sr, double cap, int trial,
                    std::uint64_t seed, const DesignResult& r) {
    std::string row;
    const auto add = [&row](const std::string& s) {
        if (!row.empty()) row += ',';
        row += s;
    };
    add(fmt_num(sr));
    add(fmt_num(cap));
    add(std::to_string(trial));
    add(std::to_string(static_cast<unsigned long long>(seed)));
    add(r.scheme);
    add(to_string(r.status));
    add(std::to_string(r.outer_iterations));
    add(fmt_num(r.kpis.total_power));
    add(fmt_num(r.vars.w_cov.size() > 0 ? r.vars.w_cov.real().trace() : 0.0));
    add(std::to_string(r.rank1_ok ? 1 : 0));
    add(fmt_num(r.rank_ratio_max));
    add(fmt_num(r.kpis.ismr));
    for (int l = 0; l < cfg.n_dl; ++l) add(fmt_num(at_or_zero(r.kpis.sinr_dl, l)));
    for (int l = 0; l < cfg.n_dl; ++l) add(fmt_num(at_or_zero(r.kpis.secrecy_dl, l)));
    for (int k = 0; k < cfg.n_ul; ++k) add(fmt_num(at_or_zero(r.kpis.sinr_ul, k)));
    for (int k = 0; k < cfg.n_ul; ++k) add(fmt_num(at_or_zero(r.kpis.secrecy_ul, k)));
    for (int p = 0; p < cfg.n_eve; ++p) add(fmt_num(at_or_zero(r.kpis.sinr_eve_dl, p)));
    for (int p = 0; p < cfg.n_eve; ++p)
        for (int k = 0; k < cfg.n_ul; ++k) add(fmt_num(at_or_zero(r.kpis.sinr_eve_ul, p, k)));
    return row;
}

struct CellOut {
    std::vector<DesignResult> results;
    std::uint64_t seed = 0;
    std::string error;
};

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw RuntimeFailure("cannot open output file: " + path.string());
    out << text;
    if (!out) throw RuntimeFailure("write failed: " + path.string());
}

}  // namespace

void SweepSpec::validate() const {
    scenario.validate();
    std::vector<std::string> issues;
    if (sr_targets.empty()) issues.push_back("sweep.sr_targets must not be empty");
    for (double t : sr_targets)
        if (t < 0.0) issues.push_back("sweep.sr_targets entries must be nonnegative");
    if (ismr_values.empty()) issues.push_back("sweep.ismr_values must not be empty");
    for (double v : ismr_values)
        if (!(v > 0.0)) issues.push_back("sweep.ismr_values entries must be positive");
    if (n_trials < 1) issues.push_back("sweep.n_trials must be at least 1");
    if (jobs < 1 || jobs > 256) issues.push_back("sweep.jobs must lie in [1, 256]");
    if (schemes.empty()) issues.push_back("sweep.schemes must not be empty");
    std::set<std::string> seen;
    const auto& known = canonical_schemes();
    for (const auto& s : schemes) {
        if (std::find(known.begin(), known.end(), s) == known.end())
            issues.push_back("unknown scheme: " + s);
        if (!seen.insert(s).second) issues.push_back("duplicate scheme: " + s);
    }
    if (out_dir.empty()) issues.push_back("sweep.out_dir must not be empty");
    if (!issues.empty()) {
        std::string msg = "invalid sweep specification:";
        for (const auto& s : issues) msg += "\n  - " + s;
        throw ConfigError(msg);
    }
}

SweepSpec sweep_from_json(const nlohmann::json& j) {
    SweepSpec spec;
    spec.scenario = config_from_json(j);
    if (j.contains("sweep")) {
        const json& sw = j.at("sweep");
        if (!sw.is_object()) throw ConfigError("\"sweep\" must be an object");
        static const std::set<std::string> allowed{
            "sr_targets", "ismr_values", "n_trials",       "schemes",
            "out_dir",    "jobs",        "debug_solver",   "max_outer",
            "obj_tol",    "rank_tol",    "solver_max_iter", "solver_eps"};
        for (auto it = sw.begin(); it != sw.end(); ++it) {
            if (!allowed.count(it.key())) throw ConfigError("unknown sweep key: " + it.key());
        }
        const auto num_list = [&sw](const char* key, std::vector<double>& into) {
            if (!sw.contains(key)) return;
            const json& v = sw.at(key);
            into.clear();
            if (v.is_number()) {
                into.push_back(v.get<double>());
            } else if (v.is_array()) {
                for (const auto& e : v) into.push_back(e.get<double>());
            } else {
                throw ConfigError(std::string("sweep.") + key + " must be a number or array");
            }
        };
        num_list("sr_targets", spec.sr_targets);
        num_list("ismr_values", spec.ismr_values);
        if (sw.contains("n_trials")) spec.n_trials = sw.at("n_trials").get<int>();
        if (sw.contains("schemes"))
            spec.schemes = sw.at("schemes").get<std::vector<std::string>>();
        if (sw.contains("out_dir")) spec.out_dir = sw.at("out_dir").get<std::string>();
        if (sw.contains("jobs")) spec.jobs = sw.at("jobs").get<int>();
        if (sw.contains("debug_solver")) spec.debug_solver = sw.at("debug_solver").get<bool>();
        if (sw.contains("max_outer")) spec.sca.max_outer = sw.at("max_outer").get<int>();
        if (sw.contains("obj_tol")) spec.sca.obj_tol = sw.at("obj_tol").get<double>();
        if (sw.contains("rank_tol")) spec.sca.rank_tol = sw.at("rank_tol").get<double>();
        if (sw.contains("solver_max_iter"))
            spec.sca.solver.max_iter = sw.at("solver_max_iter").get<int>();
        if (sw.contains("solver_eps")) {
            const double eps = sw.at("solver_eps").get<double>();
            spec.sca.solver.eps_abs = eps;
            spec.sca.solver.eps_rel = eps;
        }
    }
    spec.validate();
    return spec;
}

SweepSpec sweep_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return sweep_from_json(j);
}

double feasibility_rate(const std::vector<DesignResult>& results) {
    if (results.empty()) throw std::invalid_argument("feasibility_rate: empty result set");
    int n = 0;
    for (const auto& r : results)
        if (r.status == DesignStatus::converged) ++n;
    return double(n) / double(results.size());
}

void emit_beampattern(const DesignVariables& dv, const ScenarioConfig& cfg, double step_deg,
                      const std::string& path) {
    if (!(step_deg > 0.0) || step_deg > 10.0)
        throw std::invalid_argument("emit_beampattern: step must lie in (0, 10] degrees");
    std::vector<double> grid;
    for (double t = -90.0; t < 90.0 - 1e-12; t += step_deg) grid.push_back(t);
    grid.push_back(90.0);
    RVec theta(static_cast<Eigen::Index>(grid.size()));
    for (std::size_t i = 0; i < grid.size(); ++i) theta(static_cast<Eigen::Index>(i)) = grid[i];
    const RVec vals = beampattern(dv, theta, cfg.n_tx, cfg.tx_spacing / cfg.wavelength);
    std::string text = "theta_deg,power\n";
    for (Eigen::Index i = 0; i < theta.size(); ++i)
        text += fmt_num(theta(i)) + "," + fmt_num(vals(i)) + "\n";
    write_text(path, text);
}

SweepReport run_sweep(const SweepSpec& spec) {
    spec.validate();
    const auto t0 = std::chrono::steady_clock::now();

    const fs::path out_dir(spec.out_dir);
    const fs::path cell_dir = out_dir / "cells";
    std::error_code ec;
    fs::create_directories(cell_dir, ec);
    if (ec) throw RuntimeFailure("cannot create output directory: " + cell_dir.string());
    const fs::path marker = out_dir / ".running";
    write_text(marker, "sweep in progress\n");

    const int n_sr = static_cast<int>(spec.sr_targets.size());
    const int n_ismr = static_cast<int>(spec.ismr_values.size());
    const int n_cells = n_sr * n_ismr * spec.n_trials;

    const auto requested = [&spec](const std::string& s) {
        return std::find(spec.schemes.begin(), spec.schemes.end(), s) != spec.schemes.end();
    };
    const bool need_budget = requested("no_an") || requested("isotropic_an");

    const auto cell_key = [](int ti, int ii, int trial) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), "t%02d_i%02d_r%04d", ti, ii, trial);
        return std::string(buf);
    };

    std::vector<CellOut> outs(n_cells);
    const auto compute_cell = [&](int idx) {
        const int ti = idx / (n_ismr * spec.n_trials);
        const int ii = (idx / spec.n_trials) % n_ismr;
        const int trial = idx % spec.n_trials;
        const double sr = spec.sr_targets[ti];
        const double cap = spec.ismr_values[ii];

        ScenarioConfig cfg = spec.scenario;
        cfg.seed = trial_seed(spec.scenario.seed, static_cast<std::uint64_t>(trial));
        outs[idx].seed = cfg.seed;
        const ChannelSet cs = generate_channels(cfg);
        const Thresholds th = thresholds_from_targets(cfg, sr, sr, cap);
        const std::string key = cell_key(ti, ii, trial);

        const auto settings_for = [&](const std::string& scheme) {
            ScaSettings st = spec.sca;
            if (spec.debug_solver)
                st.solver.debug_trace_path =
                    (cell_dir / (key + "_" + scheme + ".solver.csv")).string();
            return st;
        };
        const auto dummy = [&](const std::string& scheme) {
            DesignResult d;
            d.status = DesignStatus::infeasible;
            d.scheme = scheme;
            d.message = "no matched power level: proposed design did not converge";
            return d;
        };

        DesignResult prop;
        bool have_prop = false;
        if (requested("proposed") || need_budget) {
            prop = proposed_design(cfg, cs, th, settings_for("proposed"));
            have_prop = true;
            if (requested("proposed")) outs[idx].results.push_back(prop);
        }
        if (requested("without_an"))
            outs[idx].results.push_back(
                proposed_without_an(cfg, cs, th, settings_for("without_an")));
        const bool budget_ok = have_prop && prop.status == DesignStatus::converged;
        if (requested("no_an"))
            outs[idx].results.push_back(
                budget_ok ? no_an_design(cfg, cs, th, power_budget_from(prop),
                                         settings_for("no_an"))
                          : dummy("no_an"));
        if (requested("isotropic_an"))
            outs[idx].results.push_back(
                budget_ok ? isotropic_an_design(cfg, cs, th, power_budget_from(prop),
                                                settings_for("isotropic_an"))
                          : dummy("isotropic_an"));
        for (auto& r : outs[idx].results) r.trial = trial;
    };

    const int jobs = std::max(1, std::min(spec.jobs, n_cells));
    if (jobs == 1) {
        for (int i = 0; i < n_cells; ++i) {
            try {
                compute_cell(i);
            } catch (const std::exception& e) {
                outs[i].error = e.what();
            }
        }
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) {
            pool.emplace_back([&]() {
                for (int i = next.fetch_add(1); i < n_cells; i = next.fetch_add(1)) {
                    try {
                        compute_cell(i);
                    } catch (const std::exception& e) {
                        outs[i].error = e.what();
                    }
                }
            });
        }
        for (auto& t : pool) t.join();
    }
    for (int i = 0; i < n_cells; ++i)
        if (!outs[i].error.empty())
            throw RuntimeFailure("sweep cell " + std::to_string(i) + " failed: " + outs[i].error);

    // All outputs are written sequentially in cell order so reruns with any
    // job count produce identical bytes.
    const std::vector<Column> cols = csv_columns(spec.scenario);
    std::string csv;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) csv += ',';
        csv += cols[i].name;
    }
    csv += '\n';

    std::vector<FeasibilityCell> feas;
    for (const auto& scheme : canonical_schemes()) {
        if (!requested(scheme)) continue;
        for (int ti = 0; ti < n_sr; ++ti)
            for (int ii = 0; ii < n_ismr; ++ii) {
                FeasibilityCell fc;
                fc.scheme = scheme;
                fc.sr_target = spec.sr_targets[ti];
                fc.ismr_max = spec.ismr_values[ii];
                feas.push_back(fc);
            }
    }
    const auto feas_at = [&](const std::string& scheme, int ti, int ii) -> FeasibilityCell& {
        for (auto& fc : feas)
            if (fc.scheme == scheme && fc.sr_target == spec.sr_targets[ti] &&
                fc.ismr_max == spec.ismr_values[ii])
                return fc;
        throw RuntimeFailure("feasibility bookkeeping out of sync");
    };

    SweepReport rep;
    for (int idx = 0; idx < n_cells; ++idx) {
        const int ti = idx / (n_ismr * spec.n_trials);
        const int ii = (idx / spec.n_trials) % n_ismr;
        const int trial = idx % spec.n_trials;
        const std::string key = cell_key(ti, ii, trial);
        for (const auto& r : outs[idx].results) {
            csv += csv_row(spec.scenario, spec.sr_targets[ti], spec.ismr_values[ii], trial,
                           outs[idx].seed, r);
            csv += '\n';
            FeasibilityCell& fc = feas_at(r.scheme, ti, ii);
            fc.n_total += 1;
            if (r.status == DesignStatus::converged) fc.n_converged += 1;
            rep.results_total += 1;
            if (r.status == DesignStatus::converged) rep.results_converged += 1;

            const fs::path base = cell_dir / (key + "_" + r.scheme);
            write_text(fs::path(base).concat(".json"), result_to_json(r).dump(2) + "\n");
            std::string trace = "outer_iter,total_power\n";
            for (std::size_t m = 0; m < r.objective_trace.size(); ++m)
                trace += std::to_string(m) + "," + fmt_num(r.objective_trace[m]) + "\n";
            write_text(fs::path(base).concat(".trace.csv"), trace);
        }
    }

    const fs::path csv_path = out_dir / "results.csv";
    write_text(csv_path, csv);

    json schema;
    schema["format"] = "secfd-sweep-schema";
    schema["csv"] = "results.csv";
    json jcols = json::array();
    for (const auto& c : cols) jcols.push_back({{"name", c.name}, {"type", c.type}});
    schema["columns"] = std::move(jcols);
    const fs::path schema_path = out_dir / "schema.json";
    write_text(schema_path, schema.dump(2) + "\n");

    rep.out_dir = out_dir.string();
    rep.csv_path = csv_path.string();
    rep.schema_path = schema_path.string();
    rep.cells_total = n_cells;
    rep.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.feasibility = feas;

    json manifest;
    manifest["format"] = "secfd-sweep-manifest";
    manifest["version"] = kVersion;
    manifest["scenario"] = config_to_json(spec.scenario);
    manifest["sr_targets"] = spec.sr_targets;
    manifest["ismr_values"] = spec.ismr_values;
    manifest["n_trials"] = spec.n_trials;
    manifest["schemes"] = spec.schemes;
    manifest["jobs"] = spec.jobs;
    manifest["cells_total"] = rep.cells_total;
    manifest["results_total"] = rep.results_total;
    manifest["results_converged"] = rep.results_converged;
    manifest["wall_time_s"] = rep.wall_time_s;
    manifest["csv"] = "results.csv";
    manifest["schema"] = "schema.json";
    json jfeas = json::array();
    for (const auto& fc : feas)
        jfeas.push_back({{"scheme", fc.scheme},
                         {"sr_target", fc.sr_target},
                         {"ismr_max", fc.ismr_max},
                         {"n_total", fc.n_total},
                         {"n_converged", fc.n_converged},
                         {"rate", fc.rate()}});
    manifest["feasibility"] = std::move(jfeas);
    const fs::path manifest_path = out_dir / "manifest.json";
    write_text(manifest_path, manifest.dump(2) + "\n");
    rep.manifest_path = manifest_path.string();

    fs::remove(marker, ec);
    return rep;
}

}  // namespace secfd
