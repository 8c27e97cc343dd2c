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

#include "oracles.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>

#include "subproblem.hpp"

namespace secfd::oracles {
namespace {

CVec cgauss_vec(Rng& rng, int n) {
    CVec v(n);
    for (int i = 0; i < n; ++i) v(i) = rng.cgaussian();
    return v;
}

}  // namespace

CMat sqrt_psd(const CMat& m) {
    Eigen::SelfAdjointEigenSolver<CMat> es(hermitize(m));
    const RVec lam = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();
}

double mc_sinr_dl(int ell, const DesignVariables& dv, const ChannelSet& cs,
                  const ScenarioConfig& cfg, int n_draws, std::uint64_t seed) {
    Rng rng(seed);
    const CVec h = cs.h_dl.col(ell);
    const int nt = cfg.n_tx;
    // Row vectors h^H S^{1/2} per transmit stream, so each draw only needs
    // fresh Gaussians.
    std::vector<Eigen::RowVectorXcd> stream_rows;
    for (int l = 0; l < cfg.n_dl; ++l)
        stream_rows.push_back(h.adjoint() * sqrt_psd(dv.v_blocks[l]));
    const Eigen::RowVectorXcd an_row = h.adjoint() * sqrt_psd(dv.w_cov);
    const double sigma = std::sqrt(cfg.noise_dl[ell]);

    double sig_pow = 0.0, intf_pow = 0.0;
    for (int d = 0; d < n_draws; ++d) {
        cplx sig = 0.0, intf = 0.0;
        for (int l = 0; l < cfg.n_dl; ++l) {
            const cplx contrib = (stream_rows[l] * cgauss_vec(rng, nt)).value();
            if (l == ell)
                sig = contrib;
            else
                intf += contrib;
        }
        intf += (an_row * cgauss_vec(rng, nt)).value();
        for (int k = 0; k < cfg.n_ul; ++k)
            intf += std::sqrt(dv.p_ul(k)) * cs.f_ul2dl(ell, k) * rng.cgaussian();
        intf += sigma * rng.cgaussian();
        sig_pow += std::norm(sig);
        intf_pow += std::norm(intf);
    }
    return sig_pow / intf_pow;
}

double mc_sinr_ul(int k, const CVec& u, const DesignVariables& dv, const ChannelSet& cs,
                  const ScenarioConfig& cfg, int n_draws, std::uint64_t seed) {
    Rng rng(seed);
    const CMat c = effective_rx_mixing(cs, cfg);
    const Eigen::RowVectorXcd tx_row = u.adjoint() * c * sqrt_psd(dv.q_total());
    const Eigen::RowVectorXcd clutter_row = u.adjoint() * sqrt_psd(cs.r_clutter);
    const double sigma_n = std::sqrt(cfg.noise_bs);
    std::vector<cplx> uh(cfg.n_ul);
    for (int kp = 0; kp < cfg.n_ul; ++kp) uh[kp] = u.dot(cs.h_ul.col(kp));

    double sig_pow = 0.0, intf_pow = 0.0;
    for (int d = 0; d < n_draws; ++d) {
        cplx sig = 0.0, intf = 0.0;
        for (int kp = 0; kp < cfg.n_ul; ++kp) {
            const cplx contrib = std::sqrt(dv.p_ul(kp)) * uh[kp] * rng.cgaussian();
            if (kp == k)
                sig = contrib;
            else
                intf += contrib;
        }
        intf += (tx_row * cgauss_vec(rng, cfg.n_tx)).value();
        intf += (clutter_row * cgauss_vec(rng, cfg.n_rx)).value();
        const CVec noise = cgauss_vec(rng, cfg.n_rx);
        intf += sigma_n * u.dot(noise);
        sig_pow += std::norm(sig);
        intf_pow += std::norm(intf);
    }
    return sig_pow / intf_pow;
}

double mc_sinr_eve_dl(int p, const DesignVariables& dv, const ChannelSet& cs,
                      const ScenarioConfig& cfg, int n_draws, std::uint64_t seed) {
    Rng rng(seed);
    const CVec a = steering_vector(cfg.eve_angles_deg[p], cfg.n_tx,
                                   cfg.tx_spacing / cfg.wavelength);
    const cplx alpha = cfg.eve_pathloss[p];
    std::vector<Eigen::RowVectorXcd> stream_rows;
    for (int l = 0; l < cfg.n_dl; ++l)
        stream_rows.push_back(alpha * (a.adjoint() * sqrt_psd(dv.v_blocks[l])));
    const Eigen::RowVectorXcd an_row = alpha * (a.adjoint() * sqrt_psd(dv.w_cov));
    const double sigma = std::sqrt(cfg.noise_eve[p]);

    double sig_pow = 0.0, intf_pow = 0.0;
    for (int d = 0; d < n_draws; ++d) {
        cplx sig = 0.0, intf = 0.0;
        for (int l = 0; l < cfg.n_dl; ++l) sig += (stream_rows[l] * cgauss_vec(rng, cfg.n_tx)).value();
        for (int k = 0; k < cfg.n_ul; ++k)
            intf += std::sqrt(dv.p_ul(k)) * cs.g_eve_ul(p, k) * rng.cgaussian();
        intf += (an_row * cgauss_vec(rng, cfg.n_tx)).value();
        intf += sigma * rng.cgaussian();
        sig_pow += std::norm(sig);
        intf_pow += std::norm(intf);
    }
    return sig_pow / intf_pow;
}

double mc_sinr_eve_ul(int p, int k, const DesignVariables& dv, const ChannelSet& cs,
                      const ScenarioConfig& cfg, int n_draws, std::uint64_t seed) {
    Rng rng(seed);
    const CVec a = steering_vector(cfg.eve_angles_deg[p], cfg.n_tx,
                                   cfg.tx_spacing / cfg.wavelength);
    const cplx alpha = cfg.eve_pathloss[p];
    const Eigen::RowVectorXcd tx_row = alpha * (a.adjoint() * sqrt_psd(dv.q_total()));
    const double sigma = std::sqrt(cfg.noise_eve[p]);

    double sig_pow = 0.0, intf_pow = 0.0;
    for (int d = 0; d < n_draws; ++d) {
        cplx sig = 0.0, intf = 0.0;
        for (int kp = 0; kp < cfg.n_ul; ++kp) {
            const cplx contrib =
                std::sqrt(dv.p_ul(kp)) * cs.g_eve_ul(p, kp) * rng.cgaussian();
            if (kp == k)
                sig = contrib;
            else
                intf += contrib;
        }
        intf += (tx_row * cgauss_vec(rng, cfg.n_tx)).value();
        intf += sigma * rng.cgaussian();
        sig_pow += std::norm(sig);
        intf_pow += std::norm(intf);
    }
    return sig_pow / intf_pow;
}

CombinerOracle gen_eig_combiner(int k, const CMat& q, const RVec& p, const ChannelSet& cs,
                                const ScenarioConfig& cfg) {
    const CMat phi = phi_matrix(k, q, p, cs, cfg);
    const CVec h = cs.h_ul.col(k);
    const CMat num = p(k) * h * h.adjoint();
    Eigen::GeneralizedSelfAdjointEigenSolver<CMat> ges(num, phi);
    const int n = static_cast<int>(phi.rows());
    CombinerOracle out;
    out.value = ges.eigenvalues()(n - 1);
    out.u = ges.eigenvectors().col(n - 1).normalized();
    return out;
}

double grid_min_box_sdp(const Eigen::Vector2d& c, const RMat& m0, const RMat& m1,
                        const RMat& m2, int levels, int points) {
    const auto feasible = [&](double x0, double x1) {
        const RMat m = m0 + x0 * m1 + x1 * m2;
        Eigen::SelfAdjointEigenSolver<RMat> es(0.5 * (m + m.transpose()));
        return es.eigenvalues().minCoeff() >= -1e-12;
    };
    double lo0 = 0.0, hi0 = 1.0, lo1 = 0.0, hi1 = 1.0;
    double best = std::numeric_limits<double>::infinity();
    double bx0 = 0.0, bx1 = 0.0;
    for (int lvl = 0; lvl < levels; ++lvl) {
        const double s0 = (hi0 - lo0) / (points - 1);
        const double s1 = (hi1 - lo1) / (points - 1);
        for (int i = 0; i < points; ++i) {
            for (int j = 0; j < points; ++j) {
                const double x0 = lo0 + i * s0;
                const double x1 = lo1 + j * s1;
                if (x0 < -1e-12 || x0 > 1 + 1e-12 || x1 < -1e-12 || x1 > 1 + 1e-12) continue;
                const double val = c(0) * x0 + c(1) * x1;
                if (val < best && feasible(x0, x1)) {
                    best = val;
                    bx0 = x0;
                    bx1 = x1;
                }
            }
        }
        const double w0 = 2.0 * s0, w1 = 2.0 * s1;
        lo0 = std::max(0.0, bx0 - w0);
        hi0 = std::min(1.0, bx0 + w0);
        lo1 = std::max(0.0, bx1 - w1);
        hi1 = std::min(1.0, bx1 + w1);
    }
    return best;
}

}  // namespace secfd::oracles
