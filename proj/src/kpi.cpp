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

#include "kpi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace secfd {

CMat DesignVariables::q_total() const {
    CMat q = w_cov;
    for (const auto& v : v_blocks) q += v;
    return q;
}

double DesignVariables::total_power() const {
    double t = w_cov.trace().real();
    for (const auto& v : v_blocks) t += v.trace().real();
    t += p_ul.sum();
    return t;
}

DesignVariables zero_design(const ScenarioConfig& cfg) {
    DesignVariables dv;
    dv.v_blocks.assign(cfg.n_dl, CMat::Zero(cfg.n_tx, cfg.n_tx));
    dv.w_cov = CMat::Zero(cfg.n_tx, cfg.n_tx);
    dv.p_ul = RVec::Zero(cfg.n_ul);
    dv.u_rx = CMat::Zero(cfg.n_rx, cfg.n_ul);
    return dv;
}

namespace {

double quad(const CVec& h, const CMat& m) {
    return std::real(h.dot(m * h));
}

}  // namespace

double sinr_dl(int ell, const DesignVariables& dv, const ChannelSet& cs,
               const ScenarioConfig& cfg) {
    const CVec h = cs.h_dl.col(ell);
    const double num = quad(h, dv.v_blocks[ell]);
    double den = cfg.noise_dl[ell] + quad(h, dv.w_cov);
    for (int lp = 0; lp < cfg.n_dl; ++lp)
        if (lp != ell) den += quad(h, dv.v_blocks[lp]);
    for (int k = 0; k < cfg.n_ul; ++k)
        den += dv.p_ul(k) * std::norm(cs.f_ul2dl(ell, k));
    return num / den;
}

double sinr_ul(int k, const CVec& u, const DesignVariables& dv, const ChannelSet& cs,
               const ScenarioConfig& cfg) {
    if (u.norm() == 0.0) throw std::domain_error("sinr_ul: receive beamformer must be nonzero");
    const CMat c = effective_rx_mixing(cs, cfg);
    const CMat q = dv.q_total();
    const CVec hk = cs.h_ul.col(k);
    const double num = dv.p_ul(k) * std::norm(u.dot(hk));
    double den = cfg.noise_bs * u.squaredNorm() + quad(u, cs.r_clutter);
    const CVec cu = c.adjoint() * u;
    den += quad(cu, q);
    for (int kp = 0; kp < cfg.n_ul; ++kp)
        if (kp != k) den += dv.p_ul(kp) * std::norm(u.dot(cs.h_ul.col(kp)));
    return num / den;
}

double sinr_eve_ul(int p, int k, const DesignVariables& dv, const ChannelSet& cs,
                   const ScenarioConfig& cfg) {
    const double ratio = cfg.tx_spacing / cfg.wavelength;
    const CVec a = steering_vector(cfg.eve_angles_deg[p], cfg.n_tx, ratio);
    const double num = dv.p_ul(k) * std::norm(cs.g_eve_ul(p, k));
    double den = cfg.noise_eve[p] + std::norm(cfg.eve_pathloss[p]) * quad(a, dv.q_total());
    for (int kp = 0; kp < cfg.n_ul; ++kp)
        if (kp != k) den += dv.p_ul(kp) * std::norm(cs.g_eve_ul(p, kp));
    return num / den;
}

double sinr_eve_dl(int p, const DesignVariables& dv, const ChannelSet& cs,
                   const ScenarioConfig& cfg) {
    const double ratio = cfg.tx_spacing / cfg.wavelength;
    const CVec a = steering_vector(cfg.eve_angles_deg[p], cfg.n_tx, ratio);
    const double alpha2 = std::norm(cfg.eve_pathloss[p]);
    double num = 0.0;
    for (const auto& v : dv.v_blocks) num += quad(a, v);
    num *= alpha2;
    double den = cfg.noise_eve[p] + alpha2 * quad(a, dv.w_cov);
    for (int k = 0; k < cfg.n_ul; ++k) den += dv.p_ul(k) * std::norm(cs.g_eve_ul(p, k));
    return num / den;
}

double rate(double sinr) { return std::log2(1.0 + sinr); }

double secrecy_dl(const DesignVariables& dv, const ChannelSet& cs, const ScenarioConfig& cfg) {
    double worst = std::numeric_limits<double>::infinity();
    for (int l = 0; l < cfg.n_dl; ++l) {
        const double rl = rate(sinr_dl(l, dv, cs, cfg));
        for (int p = 0; p < cfg.n_eve; ++p) {
            worst = std::min(worst, rl - rate(sinr_eve_dl(p, dv, cs, cfg)));
        }
    }
    return std::max(0.0, worst);
}

double secrecy_ul(const DesignVariables& dv, const ChannelSet& cs, const ScenarioConfig& cfg) {
    double worst = std::numeric_limits<double>::infinity();
    for (int k = 0; k < cfg.n_ul; ++k) {
        const double rk = rate(sinr_ul(k, dv.u_rx.col(k), dv, cs, cfg));
        for (int p = 0; p < cfg.n_eve; ++p) {
            worst = std::min(worst, rk - rate(sinr_eve_ul(p, k, dv, cs, cfg)));
        }
    }
    return std::max(0.0, worst);
}

namespace {

// Trapezoid rule for the rank-accumulated outer product over one interval.
void accumulate_interval(CMat& acc, double lo_deg, double hi_deg, double step_deg, int n,
                         double spacing_ratio) {
    if (hi_deg <= lo_deg) return;
    const int segments = std::max(1, static_cast<int>(std::ceil((hi_deg - lo_deg) / step_deg)));
    const double h_rad = deg2rad(hi_deg - lo_deg) / segments;
    for (int i = 0; i <= segments; ++i) {
        const double theta = lo_deg + (hi_deg - lo_deg) * i / segments;
        const CVec a = steering_vector(theta, n, spacing_ratio);
        const double w = (i == 0 || i == segments) ? 0.5 * h_rad : h_rad;
        acc += w * (a * a.adjoint());
    }
}

}  // namespace

LobeMatrices lobe_matrices(const std::vector<std::pair<double, double>>& theta_main_deg,
                           double grid_step_deg, int n, double spacing_ratio) {
    if (grid_step_deg <= 0.0) throw std::domain_error("lobe_matrices: grid step must be > 0");
    auto main_sorted = theta_main_deg;
    std::sort(main_sorted.begin(), main_sorted.end());
    for (const auto& [lo, hi] : main_sorted) {
        if (!(lo < hi) || lo < -90.0 || hi > 90.0)
            throw std::domain_error("lobe_matrices: intervals must be inside [-90, 90]");
    }
    for (size_t i = 1; i < main_sorted.size(); ++i) {
        if (main_sorted[i].first < main_sorted[i - 1].second)
            throw std::domain_error("lobe_matrices: mainlobe intervals overlap");
    }

    LobeMatrices lm;
    lm.theta_main = main_sorted;
    lm.a_main = CMat::Zero(n, n);
    lm.a_side = CMat::Zero(n, n);

    // Complement of the mainlobe union within [-90, 90].
    double cursor = -90.0;
    for (const auto& [lo, hi] : main_sorted) {
        if (lo > cursor) lm.theta_side.emplace_back(cursor, lo);
        cursor = hi;
    }
    if (cursor < 90.0) lm.theta_side.emplace_back(cursor, 90.0);

    // The steering vector is undefined at exactly +-90; quadrature
    // endpoints touching them are nudged inward by a negligible measure.
    auto clamped = [](double lo, double hi) {
        const double eps = 1e-9;
        return std::pair<double, double>(std::max(lo, -90.0 + eps), std::min(hi, 90.0 - eps));
    };
    for (const auto& [lo, hi] : lm.theta_main) {
        const auto [a, b] = clamped(lo, hi);
        accumulate_interval(lm.a_main, a, b, grid_step_deg, n, spacing_ratio);
        lm.main_measure_rad += deg2rad(hi - lo);
    }
    for (const auto& [lo, hi] : lm.theta_side) {
        const auto [a, b] = clamped(lo, hi);
        accumulate_interval(lm.a_side, a, b, grid_step_deg, n, spacing_ratio);
        lm.side_measure_rad += deg2rad(hi - lo);
    }
    lm.a_main = hermitize(lm.a_main);
    lm.a_side = hermitize(lm.a_side);
    return lm;
}

LobeMatrices lobe_matrices_for(const ScenarioConfig& cfg) {
    std::vector<std::pair<double, double>> main;
    main.reserve(cfg.n_eve);
    for (double ang : cfg.eve_angles_deg)
        main.emplace_back(ang - cfg.mainlobe_halfwidth_deg, ang + cfg.mainlobe_halfwidth_deg);
    return lobe_matrices(main, cfg.lobe_grid_step_deg, cfg.n_tx,
                         cfg.tx_spacing / cfg.wavelength);
}

double ismr_of(const CMat& r_xx, const LobeMatrices& lm) {
    const double main_energy = trace_inner(r_xx, lm.a_main);
    const double side_energy = trace_inner(r_xx, lm.a_side);
    if (main_energy <= 0.0)
        throw RuntimeFailure("ismr: design puts no energy in the sensing mainlobes");
    return side_energy / main_energy;
}

double ismr(const DesignVariables& dv, const LobeMatrices& lm) {
    return ismr_of(dv.q_total(), lm);
}

RVec beampattern(const DesignVariables& dv, const RVec& theta_grid_deg, int n_tx,
                 double spacing_ratio) {
    const CMat r_xx = dv.q_total();
    const double floor = -1e-10 * std::max(1.0, r_xx.norm());
    RVec out(theta_grid_deg.size());
    for (Eigen::Index i = 0; i < theta_grid_deg.size(); ++i) {
        // Endpoint angles are evaluated at the open-interval limit; the
        // array response extends continuously onto [-90, 90].
        const double theta = std::clamp(theta_grid_deg(i), -90.0 + 1e-9, 90.0 - 1e-9);
        const CVec a = steering_vector(theta, n_tx, spacing_ratio);
        double v = std::real(a.dot(r_xx * a));
        if (v < floor)
            throw RuntimeFailure("beampattern: covariance is indefinite beyond rounding");
        out(i) = std::max(0.0, v);
    }
    return out;
}

}  // namespace secfd
