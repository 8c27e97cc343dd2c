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

#include <cstdint>
#include <string>
#include <vector>

#include "common.hpp"

namespace secfd {

enum class ChannelModel { rayleigh, rician };

// Full description of one simulated deployment: a full-duplex base station
// with separate tx/rx uniform linear arrays, L downlink users, K uplink
// users, and P eavesdroppers at known angles. Angles are degrees in files
// and in this struct; trigonometry converts to radians internally.
struct ScenarioConfig {
    // arrays
    int n_tx = 8;                     // transmit antennas
    int n_rx = 8;                     // receive antennas
    double wavelength = 1.0;          // carrier wavelength, meters
    double tx_spacing = 0.5;          // element spacing, meters (default lambda/2)

    // population
    int n_dl = 2;                     // downlink users
    int n_ul = 2;                     // uplink users
    int n_eve = 2;                    // eavesdroppers
    std::vector<double> eve_angles_deg{-40.0, 25.0};  // pairwise distinct, |angle| < 90

    // channel statistics
    ChannelModel channel_model = ChannelModel::rayleigh;
    double rician_kappa = 0.0;        // line-of-sight power ratio (rician only)
    double si_residual_power = 1e-2;  // residual self-interference power gain
    double clutter_power = 0.0;       // per-antenna clutter power in r_clutter

    // noise
    double noise_bs = 1.0;                // receive noise power at the BS, watts
    std::vector<double> noise_dl{1.0, 1.0};   // per downlink user
    std::vector<double> noise_eve{1.0, 1.0};  // per eavesdropper

    // eavesdropper link coefficients
    std::vector<cplx> eve_pathloss{cplx(0.5, 0.0), cplx(0.5, 0.0)};  // BS->eve gain
    std::vector<cplx> echo_gains{cplx(0.2, 0.0), cplx(0.2, 0.0)};    // radar echo gain

    // design knobs shared by the optimizer and the KPI evaluation
    double eve_sinr_cap_dl = 0.5;       // ceiling on each eavesdropper's DL-intercept SINR
    double eve_sinr_cap_ul = 0.5;       // ceiling on each eavesdropper's UL-intercept SINR
    double mainlobe_halfwidth_deg = 5.0;  // sensing mainlobe is [angle - h, angle + h]
    double lobe_grid_step_deg = 0.25;     // quadrature step for the lobe integrals

    std::uint64_t seed = 1;

    // Throws ConfigError listing every violated requirement.
    void validate() const;
};

// Parsers accept a nested-section JSON document; every field has a default.
ScenarioConfig config_from_json(const nlohmann::json& j);
ScenarioConfig config_from_file(const std::string& path);
nlohmann::json config_to_json(const ScenarioConfig& cfg);

// Array response of an n-element uniform linear array toward theta.
// Element m (1-based) is exp(j*2*pi*spacing_ratio*(m-1)*sin(theta));
// element 1 is exactly 1. |theta_deg| >= 90 is rejected (endfire excluded).
CVec steering_vector(double theta_deg, int n, double spacing_ratio);

// Near-field self-interference coupling: entry (i, j) has unit modulus and
// phase 2*pi*d_ij/lambda with d_ij the tx/rx element distance.
CMat si_channel(const RMat& rx_pos, const RMat& tx_pos, double wavelength);

// Every random draw for one Monte Carlo trial. Immutable after
// construction; safe to share across workers.
struct ChannelSet {
    CMat h_dl;       // n_tx x L, column l is downlink user l's channel
    CMat h_ul;       // n_rx x K, column k is uplink user k's channel
    CMat g_eve_ul;   // P x K, entry (p, k) couples uplink user k to eavesdropper p
    CMat f_ul2dl;    // L x K, entry (l, k) couples uplink user k into downlink user l
    CMat h_si;       // n_rx x n_tx, deterministic unit-modulus coupling
    CMat r_clutter;  // n_rx x n_rx Hermitian PSD
};

// Deterministic function of cfg.seed (draw order is frozen: h_dl, h_ul,
// g_eve_ul, f_ul2dl, clutter angles). For trial t of a sweep, callers set
// cfg.seed = trial_seed(master, t) first.
ChannelSet generate_channels(const ScenarioConfig& cfg);

// Effective tx->rx mixing matrix seen by the BS receiver: the sum of the
// per-eavesdropper radar echo outer products and the scaled
// self-interference channel.
CMat effective_rx_mixing(const ChannelSet& cs, const ScenarioConfig& cfg);

}  // namespace secfd
