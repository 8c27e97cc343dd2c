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

#include "subproblem.hpp"

#include <cmath>
#include <sstream>

namespace secfd {

void Thresholds::validate(const ScenarioConfig& cfg) const {
    auto fail = [](const std::string& msg) { throw RuntimeFailure("thresholds: " + msg); };
    if (zeta_dl.size() != cfg.n_dl || zeta_ul.size() != cfg.n_ul ||
        zeta_eve_dl.size() != cfg.n_eve || zeta_eve_ul.rows() != cfg.n_eve ||
        zeta_eve_ul.cols() != cfg.n_ul)
        fail("dimension mismatch with scenario");
    if (zeta_dl.minCoeff() <= 0.0 || zeta_ul.minCoeff() <= 0.0 ||
        zeta_eve_dl.minCoeff() <= 0.0 || zeta_eve_ul.minCoeff() <= 0.0 || ismr_max <= 0.0)
        fail("all thresholds must be strictly positive");
}

double AffineConstraint::value(const DesignVariables& dv) const {
    double v = constant;
    for (size_t l = 0; l < v_coef.size(); ++l) v += trace_inner(v_coef[l], dv.v_blocks[l]);
    if (w_coef.size() > 0) v += trace_inner(w_coef, dv.w_cov);
    v += p_coef.dot(dv.p_ul);
    return v;
}

RMat embed_hermitian(const CMat& h) {
    const int n = static_cast<int>(h.rows());
    RMat e(2 * n, 2 * n);
    e.topLeftCorner(n, n) = h.real();
    e.bottomRightCorner(n, n) = h.real();
    e.topRightCorner(n, n) = -h.imag();
    e.bottomLeftCorner(n, n) = h.imag();
    return e;
}

CMat unembed_hermitian(const RMat& m) {
    const int n = static_cast<int>(m.rows()) / 2;
    const RMat re = 0.5 * (m.topLeftCorner(n, n) + m.bottomRightCorner(n, n));
    const RMat im = 0.5 * (m.bottomLeftCorner(n, n) - m.bottomLeftCorner(n, n).transpose());
    CMat h(n, n);
    h.real() = 0.5 * (re + re.transpose());
    h.imag() = im;
    return h;
}

CMat phi_matrix(int k, const CMat& q, const RVec& p, const ChannelSet& cs,
                const ScenarioConfig& cfg) {
    const CMat c = effective_rx_mixing(cs, cfg);
    CMat phi = cfg.noise_bs * CMat::Identity(cfg.n_rx, cfg.n_rx) + cs.r_clutter;
    phi += c * q * c.adjoint();
    for (int kp = 0; kp < cfg.n_ul; ++kp)
        if (kp != k) phi += p(kp) * (cs.h_ul.col(kp) * cs.h_ul.col(kp).adjoint());
    return hermitize(phi);
}

namespace {

AffineConstraint blank_constraint(const ScenarioConfig& cfg) {
    AffineConstraint c;
    c.v_coef.assign(cfg.n_dl, CMat::Zero(cfg.n_tx, cfg.n_tx));
    c.w_coef = CMat::Zero(cfg.n_tx, cfg.n_tx);
    c.p_coef = RVec::Zero(cfg.n_ul);
    return c;
}

CVec eve_steering(int p_idx, const ScenarioConfig& cfg) {
    return steering_vector(cfg.eve_angles_deg[p_idx], cfg.n_tx,
                           cfg.tx_spacing / cfg.wavelength);
}

// w = phi_m^{-1} h_k and the gain g_m = h_k^H w at the expansion point,
// with a conditioning gate on phi_m.
struct TangentBasis {
    CVec w;
    double g_m = 0.0;
};

TangentBasis tangent_basis(int k, const CMat& phi_m, const ChannelSet& cs, const char* who) {
    Eigen::SelfAdjointEigenSolver<CMat> es(hermitize(phi_m));
    if (es.info() != Eigen::Success)
        throw RuntimeFailure(std::string(who) + ": eigendecomposition failed");
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    if (lo <= 0.0 || hi / lo > 1e14) {
        std::ostringstream os;
        os << who << ": expansion covariance is numerically singular"
           << " (min eig " << lo << ", condition " << (lo > 0.0 ? hi / lo : INFINITY) << ")";
        throw RuntimeFailure(os.str());
    }
    TangentBasis tb;
    const CVec h = cs.h_ul.col(k);
    tb.w = es.eigenvectors() * es.eigenvalues().cwiseInverse().asDiagonal() *
           (es.eigenvectors().adjoint() * h);
    tb.g_m = std::real(h.dot(tb.w));
    return tb;
}

}  // namespace

AffineConstraint dl_constraint(int ell, const ChannelSet& cs, const ScenarioConfig& cfg,
                               double zeta) {
    AffineConstraint c = blank_constraint(cfg);
    const CVec h = cs.h_dl.col(ell);
    const CMat outer = h * h.adjoint();
    for (int l = 0; l < cfg.n_dl; ++l) c.v_coef[l] = (l == ell) ? (outer / zeta).eval() : (-outer).eval();
    c.w_coef = -outer;
    for (int k = 0; k < cfg.n_ul; ++k) c.p_coef(k) = -std::norm(cs.f_ul2dl(ell, k));
    c.constant = -cfg.noise_dl[ell];
    c.label = "dl[" + std::to_string(ell) + "]";
    return c;
}

AffineConstraint eve_dl_constraint(int p_idx, const ChannelSet& cs, const ScenarioConfig& cfg,
                                   double zeta) {
    AffineConstraint c = blank_constraint(cfg);
    const CVec a = eve_steering(p_idx, cfg);
    const CMat outer = a * a.adjoint();
    const double alpha2 = std::norm(cfg.eve_pathloss[p_idx]);
    for (int l = 0; l < cfg.n_dl; ++l) c.v_coef[l] = -(alpha2 / zeta) * outer;
    c.w_coef = alpha2 * outer;
    for (int k = 0; k < cfg.n_ul; ++k) c.p_coef(k) = std::norm(cs.g_eve_ul(p_idx, k));
    c.constant = cfg.noise_eve[p_idx];
    c.label = "eve_dl[" + std::to_string(p_idx) + "]";
    return c;
}

AffineConstraint eve_ul_constraint(int p_idx, int k, const ChannelSet& cs,
                                   const ScenarioConfig& cfg, double zeta) {
    AffineConstraint c = blank_constraint(cfg);
    const CVec a = eve_steering(p_idx, cfg);
    const CMat outer = a * a.adjoint();
    const double alpha2 = std::norm(cfg.eve_pathloss[p_idx]);
    for (int l = 0; l < cfg.n_dl; ++l) c.v_coef[l] = alpha2 * outer;
    c.w_coef = alpha2 * outer;
    for (int kp = 0; kp < cfg.n_ul; ++kp)
        c.p_coef(kp) = (kp == k) ? -std::norm(cs.g_eve_ul(p_idx, k)) / zeta
                                 : std::norm(cs.g_eve_ul(p_idx, kp));
    c.constant = cfg.noise_eve[p_idx];
    c.label = "eve_ul[" + std::to_string(p_idx) + "," + std::to_string(k) + "]";
    return c;
}

AffineConstraint ismr_constraint(const LobeMatrices& lm, double ismr_max,
                                 const ScenarioConfig& cfg) {
    AffineConstraint c = blank_constraint(cfg);
    const CMat m = hermitize(ismr_max * lm.a_main - lm.a_side);
    for (int l = 0; l < cfg.n_dl; ++l) c.v_coef[l] = m;
    c.w_coef = m;
    c.constant = 0.0;
    c.label = "ismr";
    return c;
}

AffineConstraint ul_gain_tangent(int k, const CMat& phi_m, const ChannelSet& cs,
                                 const ScenarioConfig& cfg) {
    const TangentBasis tb = tangent_basis(k, phi_m, cs, "ul_gain_tangent");

    const CMat c_mix = effective_rx_mixing(cs, cfg);
    const CVec cw = c_mix.adjoint() * tb.w;
    const CMat g_mat = cw * cw.adjoint();  // rank-1 PSD trace coefficient on Q

    AffineConstraint c = blank_constraint(cfg);
    for (int l = 0; l < cfg.n_dl; ++l) c.v_coef[l] = -g_mat;
    c.w_coef = -g_mat;
    for (int kp = 0; kp < cfg.n_ul; ++kp)
        if (kp != k) c.p_coef(kp) = -std::norm(tb.w.dot(cs.h_ul.col(kp)));
    const double fixed =
        std::real(tb.w.dot(cs.r_clutter * tb.w)) + cfg.noise_bs * tb.w.squaredNorm();
    c.constant = 2.0 * tb.g_m - fixed;
    c.label = "ul_tangent[" + std::to_string(k) + "]";
    return c;
}

AffineConstraint ul_floor_constraint(int k, const CMat& phi_m, const ChannelSet& cs,
                                     const ScenarioConfig& cfg, double zeta) {
    const TangentBasis tb = tangent_basis(k, phi_m, cs, "ul_floor_constraint");
    AffineConstraint c = blank_constraint(cfg);
    c.label = "ul_floor[" + std::to_string(k) + "]";
    if (!(tb.g_m > 0.0)) {
        // Zero uplink channel: no power can serve the user.
        c.constant = -zeta;
        return c;
    }

    const CMat c_mix = effective_rx_mixing(cs, cfg);
    const CVec cw = c_mix.adjoint() * tb.w;
    const CMat g_mat = cw * cw.adjoint();  // rank-1 PSD trace coefficient on Q
    for (int l = 0; l < cfg.n_dl; ++l) c.v_coef[l] = -zeta * g_mat;
    c.w_coef = -zeta * g_mat;
    c.p_coef(k) = tb.g_m * tb.g_m;
    for (int kp = 0; kp < cfg.n_ul; ++kp)
        if (kp != k) c.p_coef(kp) = -zeta * std::norm(tb.w.dot(cs.h_ul.col(kp)));
    const double fixed =
        std::real(tb.w.dot(cs.r_clutter * tb.w)) + cfg.noise_bs * tb.w.squaredNorm();
    c.constant = -zeta * fixed;
    return c;
}

AffineConstraint taylor_ul_constraint(int k, const CMat& phi_m, const RVec& p_anchor,
                                      const ChannelSet& cs, const ScenarioConfig& cfg,
                                      double zeta) {
    const TangentBasis tb = tangent_basis(k, phi_m, cs, "taylor_ul_constraint");
    AffineConstraint c = ul_gain_tangent(k, phi_m, cs, cfg);

    // Affinize p_k * tangent about p_anchor: scale the tangent row by the
    // anchor power and add the first-order term of p_k at the anchor gain.
    const double pk_m = p_anchor(k);
    for (int l = 0; l < cfg.n_dl; ++l) c.v_coef[l] *= pk_m;
    c.w_coef *= pk_m;
    c.p_coef *= pk_m;
    c.p_coef(k) = tb.g_m;
    c.constant = pk_m * (c.constant - tb.g_m) - zeta;
    c.label = "ul_taylor[" + std::to_string(k) + "]";
    return c;
}

VariableLayout layout_for(const ScenarioConfig& cfg, const AssembleOptions& opts) {
    VariableLayout lay;
    lay.n_tx = cfg.n_tx;
    lay.n_dl = cfg.n_dl;
    lay.n_ul = cfg.n_ul;
    lay.with_an = opts.with_an;
    return lay;
}

int structural_equality_rows(const VariableLayout& lay) {
    return lay.n_blocks() * (lay.n_tx * lay.n_tx + lay.n_tx);
}

int effective_variable_count(const VariableLayout& lay) {
    return lay.x_dim() - structural_equality_rows(lay);
}

RVec pack_design(const DesignVariables& dv, const VariableLayout& lay) {
    RVec x = RVec::Zero(lay.x_dim());
    for (int l = 0; l < lay.n_dl; ++l)
        x.segment(lay.block_offset(l), lay.block_dim()) = svec(embed_hermitian(dv.v_blocks[l]));
    if (lay.with_an)
        x.segment(lay.w_offset(), lay.block_dim()) = svec(embed_hermitian(dv.w_cov));
    x.tail(lay.n_ul) = dv.p_ul;
    return x;
}

DesignVariables unpack_design(const RVec& x, const VariableLayout& lay,
                              const ScenarioConfig& cfg) {
    DesignVariables dv = zero_design(cfg);
    for (int l = 0; l < lay.n_dl; ++l)
        dv.v_blocks[l] =
            unembed_hermitian(unsvec(x.segment(lay.block_offset(l), lay.block_dim()), lay.side()));
    if (lay.with_an)
        dv.w_cov = unembed_hermitian(unsvec(x.segment(lay.w_offset(), lay.block_dim()), lay.side()));
    dv.p_ul = x.tail(lay.n_ul);
    return dv;
}

std::vector<AffineConstraint> constraint_rows(const ChannelSet& cs, const ScenarioConfig& cfg,
                                              const Thresholds& th,
                                              const std::vector<CMat>& phi_list,
                                              const RVec& p_anchor, const AssembleOptions& opts,
                                              const LobeMatrices* lm) {
    th.validate(cfg);
    if (static_cast<int>(phi_list.size()) != cfg.n_ul || p_anchor.size() != cfg.n_ul)
        throw RuntimeFailure("assemble: anchor dimensions do not match the scenario");

    std::vector<AffineConstraint> rows;
    for (int l = 0; l < cfg.n_dl; ++l)
        rows.push_back(dl_constraint(l, cs, cfg, th.zeta_dl(l)));
    for (int k = 0; k < cfg.n_ul; ++k)
        rows.push_back(ul_floor_constraint(k, phi_list[k], cs, cfg, th.zeta_ul(k)));
    if (opts.with_eve) {
        for (int p = 0; p < cfg.n_eve; ++p)
            rows.push_back(eve_dl_constraint(p, cs, cfg, th.zeta_eve_dl(p)));
        for (int p = 0; p < cfg.n_eve; ++p)
            for (int k = 0; k < cfg.n_ul; ++k)
                rows.push_back(eve_ul_constraint(p, k, cs, cfg, th.zeta_eve_ul(p, k)));
    }
    if (opts.with_ismr) {
        LobeMatrices local;
        if (!lm) {
            local = lobe_matrices_for(cfg);
            lm = &local;
        }
        rows.push_back(ismr_constraint(*lm, th.ismr_max, cfg));
    }
    return rows;
}

namespace {

// Column indices and coefficients of one affine row over the packed
// variable, with the half weights that undo the doubled embedded traces.
std::vector<std::pair<int, double>> row_entries(const AffineConstraint& c,
                                                const VariableLayout& lay) {
    std::vector<std::pair<int, double>> entries;
    for (int l = 0; l < lay.n_dl; ++l) {
        const RVec q = svec(embed_hermitian(c.v_coef[l]));
        for (int i = 0; i < q.size(); ++i)
            if (q(i) != 0.0) entries.emplace_back(lay.block_offset(l) + i, 0.5 * q(i));
    }
    if (lay.with_an && c.w_coef.size() > 0) {
        const RVec q = svec(embed_hermitian(c.w_coef));
        for (int i = 0; i < q.size(); ++i)
            if (q(i) != 0.0) entries.emplace_back(lay.w_offset() + i, 0.5 * q(i));
    }
    for (int k = 0; k < lay.n_ul; ++k)
        if (c.p_coef(k) != 0.0) entries.emplace_back(lay.p_offset() + k, c.p_coef(k));
    return entries;
}

double entries_norm(const std::vector<std::pair<int, double>>& entries) {
    double norm2 = 0.0;
    for (const auto& [idx, v] : entries) norm2 += v * v;
    return std::sqrt(norm2);
}

// Writes one affine row into the triplet list at row r with unit row norm;
// returns the applied scale. Sense: s_r = scale * (value expression).
double encode_row(std::vector<Eigen::Triplet<double>>& trips, RVec& b, int r,
                  const AffineConstraint& c, const VariableLayout& lay) {
    const auto entries = row_entries(c, lay);
    const double scale = 1.0 / std::max(entries_norm(entries), 1e-12);

    for (const auto& [idx, v] : entries) trips.emplace_back(r, idx, -scale * v);
    b(r) = scale * c.constant;
    return scale;
}

}  // namespace

ConicProgram assemble(const ChannelSet& cs, const ScenarioConfig& cfg, const Thresholds& th,
                      const std::vector<CMat>& phi_list, const RVec& p_anchor,
                      const AssembleOptions& opts, const LobeMatrices* lm) {
    const VariableLayout lay = layout_for(cfg, opts);
    const std::vector<AffineConstraint> ineq =
        constraint_rows(cs, cfg, th, phi_list, p_anchor, opts, lm);

    const int n = lay.x_dim();
    const int n_struct = structural_equality_rows(lay);
    const int mz = n_struct + (opts.power_budget ? 1 : 0);
    const int ml = static_cast<int>(ineq.size()) + lay.n_ul;
    const int psd_rows = lay.n_blocks() * lay.block_dim();
    const int m = mz + ml + psd_rows;

    ConicProgram prog;
    prog.c = RVec::Zero(n);
    for (int bidx = 0; bidx < lay.n_blocks(); ++bidx) {
        // trace of the complex block is half the trace of its embedding.
        for (int dgt = 0; dgt < lay.side(); ++dgt)
            prog.c(lay.block_offset(bidx) + svec_index(dgt, dgt, lay.side())) = 0.5;
    }
    prog.c.tail(lay.n_ul).setOnes();

    prog.b = RVec::Zero(m);
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<size_t>(n) * 4);

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    int r = 0;
    const int nt = lay.n_tx, side = lay.side();
    for (int bidx = 0; bidx < lay.n_blocks(); ++bidx) {
        const int off = lay.block_offset(bidx);
        // top-left block equals bottom-right block
        for (int j = 0; j < nt; ++j)
            for (int i = j; i < nt; ++i) {
                trips.emplace_back(r, off + svec_index(i, j, side), inv_sqrt2);
                trips.emplace_back(r, off + svec_index(nt + i, nt + j, side), -inv_sqrt2);
                ++r;
            }
        // bottom-left block is skew symmetric
        for (int i = 0; i < nt; ++i) {
            trips.emplace_back(r, off + svec_index(nt + i, i, side), 1.0);
            ++r;
        }
        for (int j = 0; j < nt; ++j)
            for (int i = j + 1; i < nt; ++i) {
                trips.emplace_back(r, off + svec_index(nt + i, j, side), inv_sqrt2);
                trips.emplace_back(r, off + svec_index(nt + j, i, side), inv_sqrt2);
                ++r;
            }
    }
    if (r != n_struct) throw RuntimeFailure("assemble: structure row bookkeeping is wrong");

    if (opts.power_budget) {
        AffineConstraint budget = blank_constraint(cfg);
        for (int l = 0; l < cfg.n_dl; ++l) budget.v_coef[l] = CMat::Identity(nt, nt);
        budget.w_coef = CMat::Identity(nt, nt);
        budget.p_coef.setOnes();
        budget.constant = -*opts.power_budget;
        budget.equality = true;
        budget.label = "power_budget";
        encode_row(trips, prog.b, r++, budget, lay);
    }

    for (const auto& c : ineq) encode_row(trips, prog.b, r++, c, lay);
    for (int k = 0; k < lay.n_ul; ++k) {
        trips.emplace_back(r, lay.p_offset() + k, -1.0);
        ++r;
    }

    for (int bidx = 0; bidx < lay.n_blocks(); ++bidx) {
        const int off = lay.block_offset(bidx);
        for (int i = 0; i < lay.block_dim(); ++i) {
            trips.emplace_back(r, off + i, -1.0);
            ++r;
        }
    }
    if (r != m) throw RuntimeFailure("assemble: row bookkeeping is wrong");

    prog.a.resize(m, n);
    prog.a.setFromTriplets(trips.begin(), trips.end());
    prog.cones.n_zero = mz;
    prog.cones.n_nonneg = ml;
    prog.cones.psd_sides.assign(lay.n_blocks(), side);
    prog.check_shape();
    return prog;
}

}  // namespace secfd
