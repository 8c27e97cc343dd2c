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

#include <optional>
#include <string>
#include <vector>

#include "conic.hpp"
#include "kpi.hpp"
#include "scenario.hpp"

namespace secfd {

// SINR floors for served users, SINR ceilings for eavesdroppers, and the
// sidelobe-to-mainlobe cap.
struct Thresholds {
    RVec zeta_dl;      // L floors
    RVec zeta_ul;      // K floors
    RVec zeta_eve_dl;  // P ceilings
    RMat zeta_eve_ul;  // P x K ceilings
    double ismr_max = 1.0;

    void validate(const ScenarioConfig& cfg) const;
};

// One scalar affine constraint over (V_1..V_L, W, p):
//   sum_l trace(v_coef[l] V_l) + trace(w_coef W) + p_coef . p + constant
// compared against zero. Coefficient matrices are Hermitian, so the value
// is real.
struct AffineConstraint {
    std::vector<CMat> v_coef;
    CMat w_coef;
    RVec p_coef;
    double constant = 0.0;
    bool equality = false;  // false: value >= 0, true: value == 0
    std::string label;

    double value(const DesignVariables& dv) const;
};

// Real embedding of a Hermitian matrix: [[Re H, -Im H], [Im H, Re H]].
// PSD iff H is PSD; every eigenvalue appears twice; trace doubles.
RMat embed_hermitian(const CMat& h);
// Inverse map for any symmetric 2n x 2n input; averages the redundant
// blocks so the output is exactly Hermitian.
CMat unembed_hermitian(const RMat& m);

// Interference-plus-noise covariance seen by uplink user k's combiner:
// other users' uplink signals, the transmit covariance folded through the
// effective mixing, clutter, and BS noise. Strictly positive definite.
CMat phi_matrix(int k, const CMat& q, const RVec& p, const ChannelSet& cs,
                const ScenarioConfig& cfg);

// Downlink SINR floor written in traces:
// (1/zeta) tr(H V_l) - sum_{l' != l} tr(H V_l') - tr(H W) - sum_k p_k |f_lk|^2 - noise >= 0.
AffineConstraint dl_constraint(int ell, const ChannelSet& cs, const ScenarioConfig& cfg,
                               double zeta);

// Eavesdropper ceiling on the downlink intercept, cleared of its ratio.
AffineConstraint eve_dl_constraint(int p_idx, const ChannelSet& cs, const ScenarioConfig& cfg,
                                   double zeta);

// Eavesdropper ceiling on uplink user k's intercept, cleared of its ratio.
AffineConstraint eve_ul_constraint(int p_idx, int k, const ChannelSet& cs,
                                   const ScenarioConfig& cfg, double zeta);

// Exact affine form of ismr <= ismr_max (the ratio has positive
// denominator, so clearing it loses nothing).
AffineConstraint ismr_constraint(const LobeMatrices& lm, double ismr_max,
                                 const ScenarioConfig& cfg);

// Tangent lower bound on the uplink combining gain h^H Phi^{-1} h as an
// affine function of (V, W, p): with w = phi_m^{-1} h, the variational
// identity h^H Phi^{-1} h >= 2 Re(h^H w) - w^H Phi w holds for every PD
// Phi, with equality at phi_m. Phi_k excludes p_k, so the row has no p_k
// term.
AffineConstraint ul_gain_tangent(int k, const CMat& phi_m, const ChannelSet& cs,
                                 const ScenarioConfig& cfg);

// Uplink SINR floor enforced for the anchored MMSE combiner w = phi_m^{-1}
// h_k, cleared of its positive denominator:
//   p_k |w^H h_k|^2 - zeta w^H Phi_k(Q, p) w >= 0.
// MMSE combining dominates every fixed combiner, so this is a restriction
// of the exact floor; where Phi_k = phi_m the fixed combiner is optimal
// and the row is tight. A zero uplink channel yields an unsatisfiable row.
AffineConstraint ul_floor_constraint(int k, const CMat& phi_m, const ChannelSet& cs,
                                     const ScenarioConfig& cfg, double zeta);

// Affine form of the uplink SINR floor, linearized jointly about
// (phi_m, p_anchor): the inverse quadratic form is replaced by its tangent
// at phi_m (a global lower bound), and the product with p_k is expanded to
// first order about p_anchor. Evaluated anywhere the interference
// covariance equals phi_m, the row reduces to
//   p_k h^H phi_m^{-1} h >= zeta.
AffineConstraint taylor_ul_constraint(int k, const CMat& phi_m, const RVec& p_anchor,
                                      const ChannelSet& cs, const ScenarioConfig& cfg,
                                      double zeta);

// Which pieces of the full design problem the assembled program includes.
// Benchmarks reuse the machinery with parts removed.
struct AssembleOptions {
    bool with_an = true;                 // keep W as a variable
    bool with_eve = true;                // keep eavesdropper ceilings
    bool with_ismr = true;               // keep the sidelobe cap
    std::optional<double> power_budget;  // pin total power to this value
};

// Stacked real variable: svec of each embedded downlink block, then svec
// of the embedded W when present, then the K uplink powers.
struct VariableLayout {
    int n_tx = 0;
    int n_dl = 0;
    int n_ul = 0;
    bool with_an = true;

    int side() const { return 2 * n_tx; }
    int block_dim() const { return svec_dim(side()); }
    int n_blocks() const { return n_dl + (with_an ? 1 : 0); }
    int block_offset(int b) const { return b * block_dim(); }
    int w_offset() const { return block_offset(n_dl); }
    int p_offset() const { return n_blocks() * block_dim(); }
    int x_dim() const { return p_offset() + n_ul; }
};

VariableLayout layout_for(const ScenarioConfig& cfg, const AssembleOptions& opts = {});

// Equality rows that pin each embedded block to the Hermitian structure
// (duplicate real part, skew imaginary part): n_tx^2 + n_tx per block.
int structural_equality_rows(const VariableLayout& lay);
// Free real parameters once structure rows are discounted:
// n_dl * n_tx^2 (+ n_tx^2 with AN) + n_ul.
int effective_variable_count(const VariableLayout& lay);

RVec pack_design(const DesignVariables& dv, const VariableLayout& lay);
DesignVariables unpack_design(const RVec& x, const VariableLayout& lay,
                              const ScenarioConfig& cfg);

// Every constraint row of the per-iteration convex program, in assembly
// order: downlink floors, uplink floors for the anchored combiners,
// eavesdropper ceilings, sidelobe cap. Exposed so callers can evaluate
// surrogate feasibility directly. Only the phi_list anchors shape the
// rows; p_anchor is validated for dimension.
std::vector<AffineConstraint> constraint_rows(const ChannelSet& cs, const ScenarioConfig& cfg,
                                              const Thresholds& th,
                                              const std::vector<CMat>& phi_list,
                                              const RVec& p_anchor, const AssembleOptions& opts,
                                              const LobeMatrices* lm = nullptr);

// Packs objective (total power), the rows above, nonnegativity of p, PSD
// cones for every block, and the structure equalities into standard conic
// form. Every feasible point of the assembled program satisfies the exact
// (nonlinear) uplink floor, because the uplink rows are restrictions.
// Inequality and equality rows are scaled to unit row norm.
ConicProgram assemble(const ChannelSet& cs, const ScenarioConfig& cfg, const Thresholds& th,
                      const std::vector<CMat>& phi_list, const RVec& p_anchor,
                      const AssembleOptions& opts = {}, const LobeMatrices* lm = nullptr);

}  // namespace secfd
