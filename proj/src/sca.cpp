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

#include "sca.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace secfd {
namespace {

using nlohmann::json;

CMat psd_clip(const CMat& m) {
    Eigen::SelfAdjointEigenSolver<CMat> es(hermitize(m));
    if (es.info() != Eigen::Success) throw RuntimeFailure("psd_clip: eigendecomposition failed");
    const RVec lam = es.eigenvalues().cwiseMax(0.0);
    return hermitize(es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint());
}

// Ratio of the two largest eigenvalues plus the leading eigpair.
struct RankInfo {
    double ratio = 1.0;
    double lead = 0.0;
    CVec vec;
};

RankInfo leading_pair(const CMat& v) {
    Eigen::SelfAdjointEigenSolver<CMat> es(hermitize(v));
    if (es.info() != Eigen::Success)
        throw RuntimeFailure("rank check: eigendecomposition failed");
    const int n = static_cast<int>(v.rows());
    RankInfo ri;
    ri.lead = es.eigenvalues()(n - 1);
    const double second = n >= 2 ? std::max(es.eigenvalues()(n - 2), 0.0) : 0.0;
    ri.ratio = ri.lead > 0.0 ? second / ri.lead : 1.0;
    ri.vec = es.eigenvectors().col(n - 1);
    return ri;
}

CVec phase_fixed_column(const CVec& u, double scale) {
    CVec v = std::sqrt(scale) * u;
    int imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    const cplx lead = v(imax);
    if (std::abs(lead) > 0.0) v *= std::conj(lead) / std::abs(lead);
    return v;
}

std::string iter_trace_path(const std::string& base, int m) {
    if (base.empty()) return base;
    char tag[16];
    std::snprintf(tag, sizeof(tag), "-m%02d", m);
    const auto dot = base.find_last_of('.');
    if (dot == std::string::npos) return base + tag;
    return base.substr(0, dot) + tag + base.substr(dot);
}

bool meets_thresholds(const DesignVariables& dv, const ChannelSet& cs,
                      const ScenarioConfig& cfg, const Thresholds& th, const LobeMatrices& lm,
                      const AssembleOptions& opts, double tol) {
    for (int l = 0; l < cfg.n_dl; ++l)
        if (sinr_dl(l, dv, cs, cfg) < th.zeta_dl(l) * (1.0 - tol)) return false;
    for (int k = 0; k < cfg.n_ul; ++k)
        if (sinr_ul(k, dv.u_rx.col(k), dv, cs, cfg) < th.zeta_ul(k) * (1.0 - tol)) return false;
    if (opts.with_eve) {
        for (int p = 0; p < cfg.n_eve; ++p) {
            if (sinr_eve_dl(p, dv, cs, cfg) > th.zeta_eve_dl(p) * (1.0 + tol)) return false;
            for (int k = 0; k < cfg.n_ul; ++k)
                if (sinr_eve_ul(p, k, dv, cs, cfg) > th.zeta_eve_ul(p, k) * (1.0 + tol))
                    return false;
        }
    }
    if (opts.with_ismr && ismr(dv, lm) > th.ismr_max * (1.0 + tol)) return false;
    if (opts.power_budget &&
        std::abs(dv.total_power() - *opts.power_budget) >
            std::max(1.0, *opts.power_budget) * tol)
        return false;
    return true;
}

json cmat_to_json(const CMat& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(rows)}};
}

CMat cmat_from_json(const json& j) {
    const auto r = j.at("rows").get<Eigen::Index>();
    const auto c = j.at("cols").get<Eigen::Index>();
    CMat m(r, c);
    const json& data = j.at("data");
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index k = 0; k < c; ++k) {
            const json& e = data.at(i).at(k);
            m(i, k) = cplx(e.at(0).get<double>(), e.at(1).get<double>());
        }
    return m;
}

json rvec_to_json(const RVec& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
    return a;
}

RVec rvec_from_json(const json& j) {
    RVec v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = j.at(i).get<double>();
    return v;
}

json rmat_to_json(const RMat& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

RMat rmat_from_json(const json& j, Eigen::Index cols_hint) {
    const Eigen::Index r = static_cast<Eigen::Index>(j.size());
    const Eigen::Index c = r > 0 ? static_cast<Eigen::Index>(j.at(0).size()) : cols_hint;
    RMat m(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index k = 0; k < c; ++k) m(i, k) = j.at(i).at(k).get<double>();
    return m;
}

DesignStatus status_from_string(const std::string& s) {
    if (s == "converged") return DesignStatus::converged;
    if (s == "infeasible") return DesignStatus::infeasible;
    if (s == "iteration_limit") return DesignStatus::iteration_limit;
    if (s == "solver_failure") return DesignStatus::solver_failure;
    throw RuntimeFailure("unknown design status: " + s);
}

}  // namespace

const char* to_string(DesignStatus s) {
    switch (s) {
        case DesignStatus::converged: return "converged";
        case DesignStatus::infeasible: return "infeasible";
        case DesignStatus::iteration_limit: return "iteration_limit";
        case DesignStatus::solver_failure: return "solver_failure";
    }
    return "unknown";
}

CVec ul_beamformer(int k, const CMat& q, const RVec& p, const ChannelSet& cs,
                   const ScenarioConfig& cfg) {
    const CMat phi = phi_matrix(k, q, p, cs, cfg);
    const CVec u = Eigen::LLT<CMat>(phi).solve(cs.h_ul.col(k));
    const double nn = u.norm();
    if (!(nn > 0.0)) throw RuntimeFailure("ul_beamformer: degenerate combiner");
    return u / nn;
}

Thresholds thresholds_from_targets(const ScenarioConfig& cfg, double sr_dl_target,
                                   double sr_ul_target, double ismr_max) {
    if (sr_dl_target < 0.0 || sr_ul_target < 0.0)
        throw std::invalid_argument("secrecy-rate targets must be nonnegative");
    Thresholds th;
    th.zeta_dl = RVec::Constant(
        cfg.n_dl, (1.0 + cfg.eve_sinr_cap_dl) * std::exp2(sr_dl_target) - 1.0);
    th.zeta_ul = RVec::Constant(
        cfg.n_ul, (1.0 + cfg.eve_sinr_cap_ul) * std::exp2(sr_ul_target) - 1.0);
    th.zeta_eve_dl = RVec::Constant(cfg.n_eve, cfg.eve_sinr_cap_dl);
    th.zeta_eve_ul = RMat::Constant(cfg.n_eve, cfg.n_ul, cfg.eve_sinr_cap_ul);
    th.ismr_max = ismr_max;
    th.validate(cfg);
    return th;
}

RealizedKpis realized_kpis(const DesignVariables& dv, const ChannelSet& cs,
                           const ScenarioConfig& cfg, const LobeMatrices* lm) {
    DesignVariables d = dv;
    d.u_rx.resize(cfg.n_rx, cfg.n_ul);
    const CMat q = d.q_total();
    for (int k = 0; k < cfg.n_ul; ++k) d.u_rx.col(k) = ul_beamformer(k, q, d.p_ul, cs, cfg);
    RealizedKpis kp;
    kp.sinr_dl.resize(cfg.n_dl);
    kp.sinr_ul.resize(cfg.n_ul);
    kp.sinr_eve_dl.resize(cfg.n_eve);
    kp.sinr_eve_ul.resize(cfg.n_eve, cfg.n_ul);
    kp.secrecy_dl.resize(cfg.n_dl);
    kp.secrecy_ul.resize(cfg.n_ul);
    for (int l = 0; l < cfg.n_dl; ++l) kp.sinr_dl(l) = sinr_dl(l, d, cs, cfg);
    for (int k = 0; k < cfg.n_ul; ++k) kp.sinr_ul(k) = sinr_ul(k, d.u_rx.col(k), d, cs, cfg);
    for (int p = 0; p < cfg.n_eve; ++p) {
        kp.sinr_eve_dl(p) = sinr_eve_dl(p, d, cs, cfg);
        for (int k = 0; k < cfg.n_ul; ++k) kp.sinr_eve_ul(p, k) = sinr_eve_ul(p, k, d, cs, cfg);
    }
    for (int l = 0; l < cfg.n_dl; ++l) {
        double worst = std::numeric_limits<double>::infinity();
        for (int p = 0; p < cfg.n_eve; ++p)
            worst = std::min(worst, rate(kp.sinr_dl(l)) - rate(kp.sinr_eve_dl(p)));
        kp.secrecy_dl(l) = std::max(0.0, worst);
    }
    for (int k = 0; k < cfg.n_ul; ++k) {
        double worst = std::numeric_limits<double>::infinity();
        for (int p = 0; p < cfg.n_eve; ++p)
            worst = std::min(worst, rate(kp.sinr_ul(k)) - rate(kp.sinr_eve_ul(p, k)));
        kp.secrecy_ul(k) = std::max(0.0, worst);
    }
    if (lm) {
        kp.ismr = ismr(d, *lm);
    } else {
        const LobeMatrices local = lobe_matrices_for(cfg);
        kp.ismr = ismr(d, local);
    }
    kp.total_power = d.total_power();
    return kp;
}

DesignResult run_design(const ScenarioConfig& cfg, const ChannelSet& cs, const Thresholds& th,
                        const AssembleOptions& opts, const ScaSettings& settings) {
    th.validate(cfg);
    const int K = cfg.n_ul;
    const LobeMatrices lm = lobe_matrices_for(cfg);
    const VariableLayout lay = layout_for(cfg, opts);

    DesignResult res;

    // Anchors: uplink powers that meet the floors against noise alone, and
    // an isotropic transmit covariance sized from the downlink floors.
    RVec p_m(K);
    for (int k = 0; k < K; ++k)
        p_m(k) = cfg.noise_bs * th.zeta_ul(k) / cs.h_ul.col(k).squaredNorm();
    double mean_gain = 0.0;
    for (int l = 0; l < cfg.n_dl; ++l) mean_gain += cs.h_dl.col(l).squaredNorm();
    mean_gain /= cfg.n_dl;
    double mean_noise = 0.0;
    for (double s2 : cfg.noise_dl) mean_noise += s2;
    mean_noise /= cfg.n_dl;
    CMat q_m = (cfg.n_dl * mean_noise * th.zeta_dl.mean() / mean_gain) *
               CMat::Identity(cfg.n_tx, cfg.n_tx);

    double prev_obj = std::numeric_limits<double>::infinity();
    WarmStart ws;
    bool have_ws = false;
    DesignVariables dv;
    bool have_dv = false;
    bool prev_restored = false;

    for (int m = 0; m < settings.max_outer; ++m) {
        std::vector<CMat> phi_list(K);
        for (int k = 0; k < K; ++k) phi_list[k] = phi_matrix(k, q_m, p_m, cs, cfg);
        const ConicProgram prog = assemble(cs, cfg, th, phi_list, p_m, opts, &lm);

        SolverSettings ss = settings.solver;
        ss.debug_trace_path = iter_trace_path(settings.solver.debug_trace_path, m);
        const ConicSolution sol = solve(prog, ss, have_ws ? &ws : nullptr);
        res.outer_iterations = m + 1;

        if (sol.status == SolveStatus::primal_infeasible) {
            res.status = DesignStatus::infeasible;
            char buf[160];
            std::snprintf(buf, sizeof(buf),
                          "restricted subproblem infeasible at outer step %d "
                          "(certificate violation %.3e)",
                          m, sol.certificate_violation);
            res.message = buf;
            break;
        }
        if (sol.status == SolveStatus::dual_infeasible) {
            res.status = DesignStatus::solver_failure;
            res.message = "subproblem reported unbounded, which a power objective excludes";
            break;
        }
        if (sol.status != SolveStatus::optimal &&
            !(sol.residuals.primal <= 1e-5 && sol.residuals.dual <= 1e-5 &&
              sol.residuals.gap <= 1e-5)) {
            res.status = DesignStatus::solver_failure;
            char buf[160];
            std::snprintf(buf, sizeof(buf),
                          "subproblem solve stopped (%s) with residuals %.2e/%.2e/%.2e",
                          to_string(sol.status), sol.residuals.primal, sol.residuals.dual,
                          sol.residuals.gap);
            res.message = buf;
            break;
        }

        DesignVariables cand = unpack_design(sol.x, lay, cfg);
        for (auto& vb : cand.v_blocks) vb = psd_clip(vb);
        if (opts.with_an) cand.w_cov = psd_clip(cand.w_cov);
        cand.p_ul = cand.p_ul.cwiseMax(0.0);
        cand.u_rx.resize(cfg.n_rx, K);
        const CMat q_new = cand.q_total();
        for (int k = 0; k < K; ++k) cand.u_rx.col(k) = ul_beamformer(k, q_new, cand.p_ul, cs, cfg);

        const double obj = cand.total_power();
        const bool restored = meets_thresholds(cand, cs, cfg, th, lm, opts, settings.restore_tol);
        const double rel = std::abs(obj - prev_obj) / std::max(1.0, std::abs(prev_obj));

        // Null step: once the objective has settled, a proposal that does
        // not improve a restored incumbent is solver noise at the floor.
        if (have_dv && prev_restored && obj > prev_obj && rel < settings.obj_tol) {
            res.objective_trace.push_back(prev_obj);
            res.status = DesignStatus::converged;
            break;
        }

        dv = std::move(cand);
        have_dv = true;
        res.objective_trace.push_back(obj);

        if (rel < settings.obj_tol && restored) {
            res.status = DesignStatus::converged;
            break;
        }

        q_m = q_new;
        p_m = dv.p_ul;
        ws.x = sol.x;
        ws.y = sol.y;
        ws.s = sol.s;
        have_ws = true;
        prev_obj = obj;
        prev_restored = restored;

        if (m + 1 == settings.max_outer) {
            res.status = DesignStatus::iteration_limit;
            res.message = restored ? "objective did not settle within the outer budget"
                                   : "thresholds were not restored within the outer budget";
        }
    }

    if (have_dv) {
        double worst_ratio = 0.0;
        bool rank_ok = true;
        std::vector<CVec> extracted;
        for (const auto& vb : dv.v_blocks) {
            const RankInfo ri = leading_pair(vb);
            worst_ratio = std::max(worst_ratio, ri.ratio);
            if (ri.ratio <= settings.rank_tol && ri.lead > 0.0)
                extracted.push_back(phase_fixed_column(ri.vec, ri.lead));
            else
                rank_ok = false;
        }
        res.rank1_ok = rank_ok;
        res.rank_ratio_max = worst_ratio;
        if (rank_ok) dv.v_rank1 = std::move(extracted);
        res.vars = dv;
        res.kpis = realized_kpis(dv, cs, cfg, &lm);
    }
    return res;
}

CVec extract_rank1(const CMat& v, double rank_tol) {
    const RankInfo ri = leading_pair(v);
    if (!(ri.lead > 0.0) || ri.ratio > rank_tol) {
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "extract_rank1: eigenvalue ratio %.3e exceeds tolerance %.3e", ri.ratio,
                      rank_tol);
        throw RuntimeFailure(buf);
    }
    return phase_fixed_column(ri.vec, ri.lead);
}

json result_to_json(const DesignResult& r) {
    json vars;
    json vb = json::array();
    for (const auto& v : r.vars.v_blocks) vb.push_back(cmat_to_json(v));
    vars["v_blocks"] = std::move(vb);
    vars["w_cov"] = cmat_to_json(r.vars.w_cov);
    vars["p_ul"] = rvec_to_json(r.vars.p_ul);
    vars["u_rx"] = cmat_to_json(r.vars.u_rx);
    json v1 = json::array();
    for (const auto& v : r.vars.v_rank1) v1.push_back(cmat_to_json(v));
    vars["v_rank1"] = std::move(v1);

    json kp;
    kp["sinr_dl"] = rvec_to_json(r.kpis.sinr_dl);
    kp["sinr_ul"] = rvec_to_json(r.kpis.sinr_ul);
    kp["sinr_eve_dl"] = rvec_to_json(r.kpis.sinr_eve_dl);
    kp["sinr_eve_ul"] = rmat_to_json(r.kpis.sinr_eve_ul);
    kp["secrecy_dl"] = rvec_to_json(r.kpis.secrecy_dl);
    kp["secrecy_ul"] = rvec_to_json(r.kpis.secrecy_ul);
    kp["ismr"] = r.kpis.ismr;
    kp["total_power"] = r.kpis.total_power;

    return json{{"format", "secfd-result"},
                {"version", kVersion},
                {"status", to_string(r.status)},
                {"scheme", r.scheme},
                {"trial", r.trial},
                {"outer_iterations", r.outer_iterations},
                {"objective_trace", r.objective_trace},
                {"rank1_ok", r.rank1_ok},
                {"rank_ratio_max", r.rank_ratio_max},
                {"message", r.message},
                {"variables", std::move(vars)},
                {"kpis", std::move(kp)}};
}

DesignResult result_from_json(const json& j) {
    try {
        if (j.at("format").get<std::string>() != "secfd-result")
            throw RuntimeFailure("not a design result document");
        DesignResult r;
        r.status = status_from_string(j.at("status").get<std::string>());
        r.scheme = j.at("scheme").get<std::string>();
        r.trial = j.at("trial").get<int>();
        r.outer_iterations = j.at("outer_iterations").get<int>();
        r.objective_trace = j.at("objective_trace").get<std::vector<double>>();
        r.rank1_ok = j.at("rank1_ok").get<bool>();
        r.rank_ratio_max = j.at("rank_ratio_max").get<double>();
        r.message = j.at("message").get<std::string>();
        const json& vars = j.at("variables");
        for (const auto& v : vars.at("v_blocks")) r.vars.v_blocks.push_back(cmat_from_json(v));
        r.vars.w_cov = cmat_from_json(vars.at("w_cov"));
        r.vars.p_ul = rvec_from_json(vars.at("p_ul"));
        r.vars.u_rx = cmat_from_json(vars.at("u_rx"));
        for (const auto& v : vars.at("v_rank1")) {
            const CMat c = cmat_from_json(v);
            r.vars.v_rank1.push_back(CVec(c));
        }
        const json& kp = j.at("kpis");
        r.kpis.sinr_dl = rvec_from_json(kp.at("sinr_dl"));
        r.kpis.sinr_ul = rvec_from_json(kp.at("sinr_ul"));
        r.kpis.sinr_eve_dl = rvec_from_json(kp.at("sinr_eve_dl"));
        r.kpis.sinr_eve_ul = rmat_from_json(kp.at("sinr_eve_ul"), r.kpis.sinr_ul.size());
        r.kpis.secrecy_dl = rvec_from_json(kp.at("secrecy_dl"));
        r.kpis.secrecy_ul = rvec_from_json(kp.at("secrecy_ul"));
        r.kpis.ismr = kp.at("ismr").get<double>();
        r.kpis.total_power = kp.at("total_power").get<double>();
        return r;
    } catch (const json::exception& e) {
        throw RuntimeFailure(std::string("malformed design result document: ") + e.what());
    }
}

}  // namespace secfd
