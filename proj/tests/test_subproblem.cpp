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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <vector>

#include "kpi.hpp"
#include "subproblem.hpp"

using namespace secfd;

namespace {

CMat rand_hermitian(Rng& rng, int n) {
    CMat g(n, n);
    for (Eigen::Index i = 0; i < g.size(); ++i) g(i) = rng.cgaussian();
    return hermitize(g);
}

CMat rand_psd(Rng& rng, int n, double scale = 1.0) {
    CMat g(n, n);
    for (Eigen::Index i = 0; i < g.size(); ++i) g(i) = rng.cgaussian();
    return CMat(scale * (g * g.adjoint()) / n);
}

RMat rand_symmetric(Rng& rng, int n) {
    RMat g(n, n);
    for (Eigen::Index i = 0; i < g.size(); ++i) g(i) = rng.gaussian();
    return RMat(0.5 * (g + g.transpose()));
}

struct Fixture {
    ScenarioConfig cfg;
    ChannelSet cs;
    Thresholds th;

    Fixture() {
        cfg.n_tx = 4;
        cfg.n_rx = 4;
        cfg.n_dl = 2;
        cfg.n_ul = 2;
        cfg.n_eve = 2;
        cfg.clutter_power = 0.2;
        cfg.seed = 314;
        cs = generate_channels(cfg);

        th.zeta_dl = RVec::Constant(2, 1.5);
        th.zeta_ul = RVec::Constant(2, 1.2);
        th.zeta_eve_dl = RVec::Constant(2, 0.5);
        th.zeta_eve_ul = RMat::Constant(2, 2, 0.5);
        th.ismr_max = 2.0;
    }

    DesignVariables random_design(std::uint64_t seed, double power = 1.0) const {
        Rng rng(seed);
        DesignVariables dv = zero_design(cfg);
        for (auto& v : dv.v_blocks) v = rand_psd(rng, cfg.n_tx, power);
        dv.w_cov = rand_psd(rng, cfg.n_tx, 0.5 * power);
        for (int k = 0; k < cfg.n_ul; ++k) dv.p_ul(k) = power * (0.2 + rng.uniform());
        return dv;
    }
};

}  // namespace

TEST_CASE("scaled lower-triangle vectorization preserves the trace inner product") {
    Rng rng(1);
    CHECK(svec_dim(1) == 1);
    CHECK(svec_dim(4) == 10);
    for (int rep = 0; rep < 20; ++rep) {
        const int d = 2 + rep % 5;
        const RMat x = rand_symmetric(rng, d);
        const RMat y = rand_symmetric(rng, d);
        const double want = (x * y).trace();
        CHECK(std::abs(svec(x).dot(svec(y)) - want) <= 1e-12 * (1.0 + std::abs(want)));
        CHECK((unsvec(svec(x), d) - x).cwiseAbs().maxCoeff() <=
              1e-15 * (1.0 + x.cwiseAbs().maxCoeff()));
    }
}

TEST_CASE("hermitian embedding doubles the spectrum and round trips") {
    Rng rng(2);
    for (int rep = 0; rep < 10; ++rep) {
        const int n = 2 + rep % 4;
        const CMat h = rand_hermitian(rng, n);
        const RMat e = embed_hermitian(h);
        REQUIRE(e.rows() == 2 * n);
        CHECK((e - e.transpose()).cwiseAbs().maxCoeff() <= 1e-14);

        Eigen::SelfAdjointEigenSolver<CMat> esc(h);
        Eigen::SelfAdjointEigenSolver<RMat> esr(e);
        for (int i = 0; i < n; ++i) {
            CHECK(esr.eigenvalues()(2 * i) == doctest::Approx(esc.eigenvalues()(i)).epsilon(1e-10));
            CHECK(esr.eigenvalues()(2 * i + 1) ==
                  doctest::Approx(esc.eigenvalues()(i)).epsilon(1e-10));
        }
        CHECK(std::abs(e.trace() - 2.0 * h.trace().real()) <= 1e-12);
        CHECK((unembed_hermitian(e) - h).cwiseAbs().maxCoeff() <= 1e-14);
    }
}

TEST_CASE("trace inner products survive embedding at half weight") {
    Rng rng(3);
    for (int rep = 0; rep < 20; ++rep) {
        const CMat g = rand_hermitian(rng, 4);
        const CMat v = rand_psd(rng, 4);
        const double want = trace_inner(g, v);
        const double got = 0.5 * svec(embed_hermitian(g)).dot(svec(embed_hermitian(v)));
        CHECK(std::abs(got - want) <= 1e-12 * (1.0 + std::abs(want)));
    }
}

TEST_CASE("uplink interference covariance matches its defining sum") {
    Fixture f;
    const DesignVariables dv = f.random_design(10);
    const CMat q = dv.q_total();
    const CMat c = effective_rx_mixing(f.cs, f.cfg);

    for (int k = 0; k < f.cfg.n_ul; ++k) {
        CMat want = f.cfg.noise_bs * CMat::Identity(f.cfg.n_rx, f.cfg.n_rx);
        want += f.cs.r_clutter;
        want += c * q * c.adjoint();
        for (int k2 = 0; k2 < f.cfg.n_ul; ++k2) {
            if (k2 == k) continue;
            want += dv.p_ul(k2) * f.cs.h_ul.col(k2) * f.cs.h_ul.col(k2).adjoint();
        }
        const CMat got = phi_matrix(k, q, dv.p_ul, f.cs, f.cfg);
        CHECK((got - want).cwiseAbs().maxCoeff() <= 1e-12 * want.cwiseAbs().maxCoeff());
        Eigen::SelfAdjointEigenSolver<CMat> es(got);
        CHECK(es.eigenvalues().minCoeff() >= f.cfg.noise_bs * (1.0 - 1e-12));
    }
}

TEST_CASE("downlink floor row agrees in sign and value with the exact SINR") {
    Fixture f;
    for (int rep = 0; rep < 50; ++rep) {
        const DesignVariables dv = f.random_design(100 + rep, 0.5 + 0.2 * rep);
        for (int l = 0; l < f.cfg.n_dl; ++l) {
            const double zeta = f.th.zeta_dl(l);
            const AffineConstraint row = dl_constraint(l, f.cs, f.cfg, zeta);
            const double s = sinr_dl(l, dv, f.cs, f.cfg);
            CHECK((row.value(dv) >= 0.0) == (s >= zeta));

            // Quantitative form: numerator / zeta minus the denominator.
            const CVec h = f.cs.h_dl.col(l);
            double denom = f.cfg.noise_dl[l];
            for (int l2 = 0; l2 < f.cfg.n_dl; ++l2)
                if (l2 != l) denom += (h.adjoint() * dv.v_blocks[l2] * h).value().real();
            denom += (h.adjoint() * dv.w_cov * h).value().real();
            for (int k = 0; k < f.cfg.n_ul; ++k)
                denom += dv.p_ul(k) * std::norm(f.cs.f_ul2dl(l, k));
            const double num = (h.adjoint() * dv.v_blocks[l] * h).value().real();
            CHECK(row.value(dv) ==
                  doctest::Approx(num / zeta - denom).epsilon(1e-10));
        }
    }
}

TEST_CASE("eavesdropper ceiling rows agree in sign with the exact SINRs") {
    Fixture f;
    for (int rep = 0; rep < 50; ++rep) {
        const DesignVariables dv = f.random_design(200 + rep, 0.3 + 0.3 * rep);
        for (int p = 0; p < f.cfg.n_eve; ++p) {
            const double cap = f.th.zeta_eve_dl(p);
            const AffineConstraint row = eve_dl_constraint(p, f.cs, f.cfg, cap);
            CHECK((row.value(dv) >= 0.0) == (sinr_eve_dl(p, dv, f.cs, f.cfg) <= cap));
            for (int k = 0; k < f.cfg.n_ul; ++k) {
                const double cap2 = f.th.zeta_eve_ul(p, k);
                const AffineConstraint row2 = eve_ul_constraint(p, k, f.cs, f.cfg, cap2);
                CHECK((row2.value(dv) >= 0.0) ==
                      (sinr_eve_ul(p, k, dv, f.cs, f.cfg) <= cap2));
            }
        }
    }
}

TEST_CASE("sidelobe cap row is the cleared ratio") {
    Fixture f;
    const auto lm = lobe_matrices_for(f.cfg);
    const AffineConstraint row = ismr_constraint(lm, f.th.ismr_max, f.cfg);
    for (int rep = 0; rep < 20; ++rep) {
        const DesignVariables dv = f.random_design(300 + rep);
        const CMat r = dv.q_total();
        const double want = f.th.ismr_max * trace_inner(lm.a_main, r) -
                            trace_inner(lm.a_side, r);
        CHECK(row.value(dv) == doctest::Approx(want).epsilon(1e-10));
        CHECK((row.value(dv) >= 0.0) == (ismr(dv, lm) <= f.th.ismr_max));
    }
}

TEST_CASE("uplink restriction reduces to a linear floor at the anchor covariance") {
    Fixture f;
    const DesignVariables anchor = f.random_design(40);
    const CMat q0 = anchor.q_total();
    const int k = 1;
    const CMat phi_m = phi_matrix(k, q0, anchor.p_ul, f.cs, f.cfg);
    const double zeta = f.th.zeta_ul(k);
    const AffineConstraint row =
        taylor_ul_constraint(k, phi_m, anchor.p_ul, f.cs, f.cfg, zeta);

    const CVec h = f.cs.h_ul.col(k);
    const double gain = h.dot(Eigen::LLT<CMat>(phi_m).solve(h)).real();

    // Varying only p_k keeps the interference covariance at the anchor, so
    // the row must equal p_k * gain - zeta.
    for (double pk : {0.0, 0.4, anchor.p_ul(k), 2.0, 9.5}) {
        DesignVariables dv = anchor;
        dv.p_ul(k) = pk;
        CHECK(row.value(dv) == doctest::Approx(pk * gain - zeta).epsilon(1e-10));
    }
}

TEST_CASE("uplink restriction minorizes the exact floor at the anchor power") {
    Fixture f;
    const int k = 0;
    const double zeta = f.th.zeta_ul(k);
    const CVec h = f.cs.h_ul.col(k);
    for (int rep = 0; rep < 200; ++rep) {
        const DesignVariables anchor = f.random_design(500 + rep, 0.4 + 0.01 * rep);
        const CMat phi_m = phi_matrix(k, anchor.q_total(), anchor.p_ul, f.cs, f.cfg);
        const AffineConstraint row =
            taylor_ul_constraint(k, phi_m, anchor.p_ul, f.cs, f.cfg, zeta);

        // Equality at the anchor itself.
        const double exact_at_anchor =
            anchor.p_ul(k) * h.dot(Eigen::LLT<CMat>(phi_m).solve(h)).real() - zeta;
        CHECK(row.value(anchor) ==
              doctest::Approx(exact_at_anchor).epsilon(1e-10));

        // Lower bound anywhere else, holding the user's own power fixed.
        DesignVariables other = f.random_design(9000 + rep, 0.3 + 0.02 * rep);
        other.p_ul(k) = anchor.p_ul(k);
        const CMat phi = phi_matrix(k, other.q_total(), other.p_ul, f.cs, f.cfg);
        const double exact =
            other.p_ul(k) * h.dot(Eigen::LLT<CMat>(phi).solve(h)).real() - zeta;
        CHECK(row.value(other) <= exact + 1e-9 * (1.0 + std::abs(exact)));
    }
}

TEST_CASE("uplink gain tangent lower bounds the inverse quadratic form") {
    Fixture f;
    const int k = 1;
    const CVec h = f.cs.h_ul.col(k);
    for (int rep = 0; rep < 200; ++rep) {
        const DesignVariables anchor = f.random_design(1300 + rep, 0.3 + 0.02 * rep);
        const CMat phi_m = phi_matrix(k, anchor.q_total(), anchor.p_ul, f.cs, f.cfg);
        const AffineConstraint row = ul_gain_tangent(k, phi_m, f.cs, f.cfg);

        // Equality where the interference covariance matches the anchor.
        const double g_m = h.dot(Eigen::LLT<CMat>(phi_m).solve(h)).real();
        CHECK(row.value(anchor) == doctest::Approx(g_m).epsilon(1e-10));

        // Global lower bound elsewhere.
        DesignVariables other = f.random_design(4600 + rep, 0.2 + 0.03 * rep);
        const CMat phi = phi_matrix(k, other.q_total(), other.p_ul, f.cs, f.cfg);
        const double exact = h.dot(Eigen::LLT<CMat>(phi).solve(h)).real();
        CHECK(row.value(other) <= exact + 1e-9 * (1.0 + exact));

        // The user's own power never enters its interference covariance.
        other.p_ul(k) += 7.0;
        CHECK(row.value(other) == doctest::Approx(row.value(DesignVariables(other))));
    }
}

TEST_CASE("uplink floor row is the cleared floor of the anchored combiner") {
    Fixture f;
    const int k = 0;
    const double zeta = f.th.zeta_ul(k);
    const CVec h = f.cs.h_ul.col(k);
    const DesignVariables anchor = f.random_design(88);
    const CMat phi_m = phi_matrix(k, anchor.q_total(), anchor.p_ul, f.cs, f.cfg);
    const AffineConstraint row = ul_floor_constraint(k, phi_m, f.cs, f.cfg, zeta);
    const CVec w = Eigen::LLT<CMat>(phi_m).solve(h);
    const double g_m = h.dot(w).real();

    // Varying only p_k keeps Phi_k at the anchor, where the anchored
    // combiner is exactly the optimal one: the row is g_m (p_k g_m - zeta).
    for (double pk : {0.0, 0.7, anchor.p_ul(k), 3.0}) {
        DesignVariables dv = anchor;
        dv.p_ul(k) = pk;
        CHECK(row.value(dv) == doctest::Approx(g_m * (pk * g_m - zeta)).epsilon(1e-10));
    }

    for (int rep = 0; rep < 200; ++rep) {
        DesignVariables dv = f.random_design(7100 + rep, 0.2 + 0.02 * rep);

        // The row is the fixed-combiner SINR floor cleared of its
        // (positive) denominator, tied to the independent KPI evaluator.
        const CMat phi = phi_matrix(k, dv.q_total(), dv.p_ul, f.cs, f.cfg);
        const double den = w.dot(phi * w).real();
        const double s_fixed = sinr_ul(k, w, dv, f.cs, f.cfg);
        CHECK(row.value(dv) == doctest::Approx((s_fixed - zeta) * den).epsilon(1e-8));

        // Optimal combining dominates the anchored combiner, so a
        // nonnegative row certifies the exact floor: the row restricts.
        const double s_best = dv.p_ul(k) * h.dot(Eigen::LLT<CMat>(phi).solve(h)).real();
        CHECK(s_best >= s_fixed - 1e-9 * (1.0 + s_fixed));
        if (row.value(dv) >= 0.0) CHECK(s_best >= zeta - 1e-9);
    }
}

TEST_CASE("uplink floor row is unsatisfiable for a dead channel") {
    Fixture f;
    const int k = 1;
    ChannelSet cs = f.cs;
    cs.h_ul.col(k).setZero();
    const DesignVariables anchor = f.random_design(91);
    const CMat phi_m = phi_matrix(k, anchor.q_total(), anchor.p_ul, cs, f.cfg);
    const AffineConstraint row =
        ul_floor_constraint(k, phi_m, cs, f.cfg, f.th.zeta_ul(k));
    CHECK(row.value(anchor) == -f.th.zeta_ul(k));
    CHECK(row.value(f.random_design(92, 5.0)) == -f.th.zeta_ul(k));
}

TEST_CASE("constraint rows place labeled uplink floors after the downlink rows") {
    Fixture f;
    const DesignVariables anchor = f.random_design(93);
    std::vector<CMat> phi_list;
    for (int k = 0; k < f.cfg.n_ul; ++k)
        phi_list.push_back(phi_matrix(k, anchor.q_total(), anchor.p_ul, f.cs, f.cfg));
    const auto lm = lobe_matrices_for(f.cfg);
    const auto rows =
        constraint_rows(f.cs, f.cfg, f.th, phi_list, anchor.p_ul, AssembleOptions{}, &lm);
    for (int k = 0; k < f.cfg.n_ul; ++k) {
        const AffineConstraint& r = rows.at(f.cfg.n_dl + k);
        CHECK(r.label == "ul_floor[" + std::to_string(k) + "]");
        const AffineConstraint direct =
            ul_floor_constraint(k, phi_list[k], f.cs, f.cfg, f.th.zeta_ul(k));
        CHECK(r.value(anchor) == doctest::Approx(direct.value(anchor)).epsilon(1e-14));
    }
}

TEST_CASE("variable layout counts match the dimensional bookkeeping") {
    ScenarioConfig cfg;
    cfg.n_tx = 8;
    cfg.n_rx = 8;
    cfg.n_dl = 2;
    cfg.n_ul = 2;
    const VariableLayout lay = layout_for(cfg);
    CHECK(lay.n_blocks() == 3);
    CHECK(lay.block_dim() == svec_dim(16));
    CHECK(lay.x_dim() == 3 * svec_dim(16) + 2);
    CHECK(effective_variable_count(lay) == 194);
    CHECK(structural_equality_rows(lay) == 216);

    AssembleOptions no_an;
    no_an.with_an = false;
    const VariableLayout lay2 = layout_for(cfg, no_an);
    CHECK(lay2.n_blocks() == 2);
    CHECK(effective_variable_count(lay2) == 130);
    CHECK(structural_equality_rows(lay2) == 144);
}

TEST_CASE("pack and unpack are mutually inverse on hermitian designs") {
    Fixture f;
    const VariableLayout lay = layout_for(f.cfg);
    const DesignVariables dv = f.random_design(60);
    const RVec x = pack_design(dv, lay);
    REQUIRE(x.size() == lay.x_dim());
    const DesignVariables back = unpack_design(x, lay, f.cfg);
    for (int l = 0; l < f.cfg.n_dl; ++l)
        CHECK((back.v_blocks[l] - dv.v_blocks[l]).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK((back.w_cov - dv.w_cov).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK((back.p_ul - dv.p_ul).cwiseAbs().maxCoeff() == 0.0);

    // Idempotent: packing the unpacked design reproduces x exactly.
    CHECK((pack_design(back, lay) - x).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("assembled program has the documented shape and slack structure") {
    Fixture f;
    const DesignVariables anchor = f.random_design(70);
    std::vector<CMat> phi_list;
    for (int k = 0; k < f.cfg.n_ul; ++k)
        phi_list.push_back(phi_matrix(k, anchor.q_total(), anchor.p_ul, f.cs, f.cfg));

    const AssembleOptions opts;
    const auto lm = lobe_matrices_for(f.cfg);
    const ConicProgram prog =
        assemble(f.cs, f.cfg, f.th, phi_list, anchor.p_ul, opts, &lm);
    const VariableLayout lay = layout_for(f.cfg, opts);
    const auto rows = constraint_rows(f.cs, f.cfg, f.th, phi_list, anchor.p_ul, opts, &lm);

    // dl + ul-floor + eve-dl + eve-ul + ismr inequalities.
    CHECK(static_cast<int>(rows.size()) == 2 + 2 + 2 + 4 + 1);
    CHECK(prog.n() == lay.x_dim());
    CHECK(prog.cones.n_zero == structural_equality_rows(lay));
    CHECK(prog.cones.n_nonneg == static_cast<int>(rows.size()) + f.cfg.n_ul);
    REQUIRE(prog.cones.psd_sides == std::vector<int>(3, 8));
    CHECK(prog.m() == prog.cones.n_zero + prog.cones.n_nonneg + 3 * lay.block_dim());

    // Objective is the total power of the packed design.
    const DesignVariables dv = f.random_design(71);
    const RVec x = pack_design(dv, lay);
    CHECK(prog.c.dot(x) == doctest::Approx(dv.total_power()).epsilon(1e-12));

    const RVec s = prog.b - prog.a * x;

    // Structure rows vanish on any packed hermitian design.
    CHECK(s.head(prog.cones.n_zero).cwiseAbs().maxCoeff() <= 1e-12);

    // Inequality slacks carry the sign of the constraint values; the last
    // n_ul of them are the powers themselves.
    for (size_t i = 0; i < rows.size(); ++i) {
        const double v = rows[i].value(dv);
        const double slack = s(prog.cones.n_zero + static_cast<int>(i));
        if (std::abs(v) > 1e-10) CHECK(slack * v > 0.0);
    }
    for (int k = 0; k < f.cfg.n_ul; ++k)
        CHECK(s(prog.cones.n_zero + static_cast<int>(rows.size()) + k) == dv.p_ul(k));

    // PSD identity rows reproduce the packed blocks.
    const int psd0 = prog.cones.n_zero + prog.cones.n_nonneg;
    CHECK((s.segment(psd0, 3 * lay.block_dim()) - x.head(3 * lay.block_dim()))
              .cwiseAbs()
              .maxCoeff() == 0.0);
}

TEST_CASE("power budget adds one equality row that pins the total") {
    Fixture f;
    const DesignVariables anchor = f.random_design(80);
    std::vector<CMat> phi_list;
    for (int k = 0; k < f.cfg.n_ul; ++k)
        phi_list.push_back(phi_matrix(k, anchor.q_total(), anchor.p_ul, f.cs, f.cfg));

    AssembleOptions opts;
    opts.power_budget = 12.5;
    const ConicProgram prog = assemble(f.cs, f.cfg, f.th, phi_list, anchor.p_ul, opts);
    const VariableLayout lay = layout_for(f.cfg, opts);
    CHECK(prog.cones.n_zero == structural_equality_rows(lay) + 1);

    DesignVariables dv = f.random_design(81);
    const double scale_to_budget = (12.5 - dv.p_ul.sum()) /
                                   (dv.total_power() - dv.p_ul.sum());
    for (auto& v : dv.v_blocks) v *= scale_to_budget;
    dv.w_cov *= scale_to_budget;
    CHECK(dv.total_power() == doctest::Approx(12.5).epsilon(1e-12));

    const RVec s = prog.b - prog.a * pack_design(dv, lay);
    const int budget_row = structural_equality_rows(lay);
    CHECK(std::abs(s(budget_row)) <= 1e-9);
}

TEST_CASE("program dump and load round trip bit exactly") {
    Fixture f;
    const DesignVariables anchor = f.random_design(90);
    std::vector<CMat> phi_list;
    for (int k = 0; k < f.cfg.n_ul; ++k)
        phi_list.push_back(phi_matrix(k, anchor.q_total(), anchor.p_ul, f.cs, f.cfg));
    const ConicProgram prog = assemble(f.cs, f.cfg, f.th, phi_list, anchor.p_ul);

    const std::string path = "/tmp/secfd_prog_dump.txt";
    dump_program(prog, path);
    const ConicProgram back = load_program(path);
    std::remove(path.c_str());

    REQUIRE(back.n() == prog.n());
    REQUIRE(back.m() == prog.m());
    CHECK(back.cones.n_zero == prog.cones.n_zero);
    CHECK(back.cones.n_nonneg == prog.cones.n_nonneg);
    CHECK(back.cones.psd_sides == prog.cones.psd_sides);
    for (int i = 0; i < prog.n(); ++i) CHECK(back.c(i) == prog.c(i));
    for (int i = 0; i < prog.m(); ++i) CHECK(back.b(i) == prog.b(i));
    const RMat da = RMat(prog.a) - RMat(back.a);
    CHECK(da.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("threshold validation rejects inconsistent shapes and signs") {
    Fixture f;
    Thresholds bad = f.th;
    bad.zeta_dl = RVec::Constant(3, 1.0);
    CHECK_THROWS_AS(bad.validate(f.cfg), RuntimeFailure);

    bad = f.th;
    bad.zeta_dl(0) = -1.0;
    CHECK_THROWS_AS(bad.validate(f.cfg), RuntimeFailure);

    bad = f.th;
    bad.ismr_max = 0.0;
    CHECK_THROWS_AS(bad.validate(f.cfg), RuntimeFailure);
}
