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

#include <utility>
#include <vector>

#include "common.hpp"
#include "scenario.hpp"

namespace secfd {

// One complete transmit/receive design. All SINR formulas below evaluate
// analytic expectations of these variables; nothing here is sampled.
struct DesignVariables {
    std::vector<CMat> v_blocks;  // L Hermitian PSD n_tx x n_tx downlink covariances
    CMat w_cov;                  // Hermitian PSD n_tx x n_tx artificial-noise covariance
    RVec p_ul;                   // K nonnegative uplink transmit powers
    CMat u_rx;                   // n_rx x K receive beamformers (optional until computed)
    std::vector<CVec> v_rank1;   // extracted downlink beamformers (optional)

    // Sum of all downlink covariances plus the artificial-noise covariance.
    CMat q_total() const;
    // trace(V_1) + ... + trace(V_L) + trace(W) + sum(p).
    double total_power() const;
};

// Zero design of matching dimensions.
DesignVariables zero_design(const ScenarioConfig& cfg);

// Downlink user ell: own-beam power over inter-beam leakage, artificial
// noise, uplink crosstalk, and receiver noise.
double sinr_dl(int ell, const DesignVariables& dv, const ChannelSet& cs,
               const ScenarioConfig& cfg);

// Uplink user k under receive beamformer u. Degree-0 homogeneous in u.
// Denominator includes the other uplink users, the transmit signal folded
// through the effective tx->rx mixing, clutter, and BS noise.
double sinr_ul(int k, const CVec& u, const DesignVariables& dv, const ChannelSet& cs,
               const ScenarioConfig& cfg);

// Eavesdropper p intercepting uplink user k.
double sinr_eve_ul(int p, int k, const DesignVariables& dv, const ChannelSet& cs,
                   const ScenarioConfig& cfg);

// Eavesdropper p intercepting the downlink broadcast; only the
// information-bearing covariances enter the numerator, artificial noise
// degrades the denominator.
double sinr_eve_dl(int p, const DesignVariables& dv, const ChannelSet& cs,
                   const ScenarioConfig& cfg);

// log2(1 + sinr).
double rate(double sinr);

// Worst-case downlink secrecy: min over (user, eavesdropper) pairs of the
// rate difference, clamped at zero after the min.
double secrecy_dl(const DesignVariables& dv, const ChannelSet& cs, const ScenarioConfig& cfg);

// Worst-case uplink secrecy; uses the receive beamformers in dv.u_rx.
double secrecy_ul(const DesignVariables& dv, const ChannelSet& cs, const ScenarioConfig& cfg);

// Quadrature of a(theta) a(theta)^H over the sensing mainlobe set and its
// complement within [-90, 90] degrees.
struct LobeMatrices {
    CMat a_main;  // Hermitian PSD n x n, integral over the mainlobe set
    CMat a_side;  // Hermitian PSD n x n, integral over the complement
    std::vector<std::pair<double, double>> theta_main;  // degrees
    std::vector<std::pair<double, double>> theta_side;  // degrees
    double main_measure_rad = 0.0;  // total mainlobe width, radians
    double side_measure_rad = 0.0;  // total sidelobe width, radians
};

// Composite trapezoid quadrature at grid_step_deg per interval. Intervals
// must lie inside [-90, 90] and be pairwise disjoint; endpoints touching
// +-90 are evaluated at the open-interval limit.
LobeMatrices lobe_matrices(const std::vector<std::pair<double, double>>& theta_main_deg,
                           double grid_step_deg, int n, double spacing_ratio);

// Mainlobe intervals [angle - halfwidth, angle + halfwidth] around each
// eavesdropper, then the quadrature above with the config's grid step.
LobeMatrices lobe_matrices_for(const ScenarioConfig& cfg);

// Integrated sidelobe-to-mainlobe ratio of the transmit covariance
// R_xx = sum(V_l) + W. Scale invariant. Throws RuntimeFailure when the
// design puts no energy in the mainlobes.
double ismr(const DesignVariables& dv, const LobeMatrices& lm);
double ismr_of(const CMat& r_xx, const LobeMatrices& lm);

// Transmit power density a(theta)^H R_xx a(theta) per grid angle, clamped
// to zero at rounding level.
RVec beampattern(const DesignVariables& dv, const RVec& theta_grid_deg, int n_tx,
                 double spacing_ratio);

}  // namespace secfd
