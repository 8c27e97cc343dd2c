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

#include "solver.hpp"

#include <Eigen/Dense>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace secfd {
namespace {

// Row layout of the cone: [zero | nonneg | psd block 0 | psd block 1 | ...].
struct ConeIndex {
    int n_zero = 0;
    int n_nonneg = 0;
    std::vector<int> psd_offset;  // absolute row offset of each psd block
    std::vector<int> psd_side;
};

ConeIndex index_cones(const ConeSpec& cones) {
    ConeIndex ix;
    ix.n_zero = cones.n_zero;
    ix.n_nonneg = cones.n_nonneg;
    int off = cones.n_zero + cones.n_nonneg;
    for (int d : cones.psd_sides) {
        ix.psd_offset.push_back(off);
        ix.psd_side.push_back(d);
        off += svec_dim(d);
    }
    return ix;
}

void project_psd_segment(RVec& v, int off, int d) {
    RMat m = unsvec(v.segment(off, svec_dim(d)), d);
    v.segment(off, svec_dim(d)) = svec(project_psd(m));
}

// Projection of an s-shaped vector onto K (zero rows forced to 0).
void project_onto_cone(RVec& v, const ConeIndex& ix) {
    v.head(ix.n_zero).setZero();
    v.segment(ix.n_zero, ix.n_nonneg) = v.segment(ix.n_zero, ix.n_nonneg).cwiseMax(0.0);
    for (std::size_t b = 0; b < ix.psd_side.size(); ++b)
        project_psd_segment(v, ix.psd_offset[b], ix.psd_side[b]);
}

// Projection of a y-shaped vector onto the dual cone K* (zero rows free).
void project_onto_dual_cone(RVec& v, const ConeIndex& ix) {
    v.segment(ix.n_zero, ix.n_nonneg) = v.segment(ix.n_zero, ix.n_nonneg).cwiseMax(0.0);
    for (std::size_t b = 0; b < ix.psd_side.size(); ++b)
        project_psd_segment(v, ix.psd_offset[b], ix.psd_side[b]);
}

struct ScaledData {
    SpMat a;            // D * A * E
    RVec b, c;          // rho_b * D b, rho_c * E c
    RVec d, e;          // diagonal scalings
    double rho_b = 1.0;
    double rho_c = 1.0;
};

// Ruiz equilibration. Rows belonging to one psd block share a single scale
// so that cone membership is preserved under the diagonal map.
ScaledData equilibrate(const ConicProgram& prog, const ConeIndex& ix, bool ruiz) {
    const int m = prog.m();
    const int n = prog.n();
    ScaledData sd;
    sd.a = prog.a;
    sd.d = RVec::Ones(m);
    sd.e = RVec::Ones(n);
    if (ruiz) {
        for (int round = 0; round < 10; ++round) {
            RVec rmax = RVec::Zero(m), cmax = RVec::Zero(n);
            for (int k = 0; k < sd.a.outerSize(); ++k) {
                for (SpMat::InnerIterator it(sd.a, k); it; ++it) {
                    const double av = std::abs(it.value());
                    rmax(it.row()) = std::max(rmax(it.row()), av);
                    cmax(it.col()) = std::max(cmax(it.col()), av);
                }
            }
            for (std::size_t b = 0; b < ix.psd_side.size(); ++b) {
                const int off = ix.psd_offset[b], len = svec_dim(ix.psd_side[b]);
                const double blk = rmax.segment(off, len).maxCoeff();
                rmax.segment(off, len).setConstant(blk);
            }
            RVec dr(m), dc(n);
            for (int i = 0; i < m; ++i) dr(i) = rmax(i) > 0 ? 1.0 / std::sqrt(rmax(i)) : 1.0;
            for (int j = 0; j < n; ++j) dc(j) = cmax(j) > 0 ? 1.0 / std::sqrt(cmax(j)) : 1.0;
            for (int k = 0; k < sd.a.outerSize(); ++k)
                for (SpMat::InnerIterator it(sd.a, k); it; ++it)
                    it.valueRef() *= dr(it.row()) * dc(it.col());
            sd.d = sd.d.cwiseProduct(dr);
            sd.e = sd.e.cwiseProduct(dc);
        }
    }
    sd.b = sd.d.cwiseProduct(prog.b);
    sd.c = sd.e.cwiseProduct(prog.c);
    sd.rho_b = 1.0 / std::max(sd.b.norm(), 1e-6);
    sd.rho_c = 1.0 / std::max(sd.c.norm(), 1e-6);
    sd.b *= sd.rho_b;
    sd.c *= sd.rho_c;
    return sd;
}

struct TraceWriter {
    std::ofstream out;

    explicit TraceWriter(const std::string& path) {
        if (path.empty()) return;
        out.open(path, std::ios::trunc);
        if (!out) throw RuntimeFailure("cannot open solver trace file: " + path);
        out << "iter,primal_residual,dual_residual,duality_gap,tau,kappa\n";
    }
    void row(int iter, const Residuals& r, double tau, double kappa) {
        if (!out.is_open()) return;
        char line[192];
        std::snprintf(line, sizeof(line), "%d,%.9e,%.9e,%.9e,%.9e,%.9e\n", iter, r.primal,
                      r.dual, r.gap, tau, kappa);
        out << line;
    }
};

}  // namespace

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::optimal: return "optimal";
        case SolveStatus::primal_infeasible: return "primal_infeasible";
        case SolveStatus::dual_infeasible: return "dual_infeasible";
        case SolveStatus::max_iter: return "max_iter";
        case SolveStatus::time_limit: return "time_limit";
    }
    return "unknown";
}

RMat project_psd(const RMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("project_psd: matrix must be square");
    const RMat sym = 0.5 * (m + m.transpose());
    Eigen::SelfAdjointEigenSolver<RMat> es(sym);
    if (es.info() != Eigen::Success) throw RuntimeFailure("project_psd: eigendecomposition failed");
    const RVec lam = es.eigenvalues().cwiseMax(0.0);
    RMat p = es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().transpose();
    return 0.5 * (p + p.transpose());
}

Residuals residuals(const ConicProgram& prog, const RVec& x, const RVec& y, const RVec& s) {
    if (x.size() != prog.n() || y.size() != prog.m() || s.size() != prog.m())
        throw std::invalid_argument("residuals: dimension mismatch");
    Residuals r;
    const double cx = prog.c.dot(x);
    const double by = prog.b.dot(y);
    r.primal = (prog.a * x + s - prog.b).norm() / (1.0 + prog.b.norm());
    r.dual = (SpMat(prog.a.transpose()) * y + prog.c).norm() / (1.0 + prog.c.norm());
    r.gap = std::abs(cx + by) / (1.0 + std::abs(cx) + std::abs(by));
    return r;
}

ConicSolution solve(const ConicProgram& prog, const SolverSettings& settings,
                    const WarmStart* warm) {
    prog.check_shape();
    if (settings.relaxation <= 0.0 || settings.relaxation >= 2.0)
        throw std::invalid_argument("solve: relaxation must lie in (0, 2)");
    const int n = prog.n();
    const int m = prog.m();
    const ConeIndex ix = index_cones(prog.cones);
    const ScaledData sd =
        equilibrate(prog, ix, settings.scaling == SolverSettings::Scaling::ruiz);

    // Direct factorization of I + A'A, reused across all iterations.
    const SpMat at = SpMat(sd.a.transpose());
    RMat gram = RMat(at * sd.a);
    gram.diagonal().array() += 1.0;
    const Eigen::LLT<RMat> llt(gram);
    if (llt.info() != Eigen::Success)
        throw RuntimeFailure("solve: factorization of I + A'A failed");

    const auto msolve = [&](const RVec& rx, const RVec& ry, RVec& zx, RVec& zy) {
        zx = llt.solve(rx - at * ry);
        zy = ry + sd.a * zx;
    };

    // g = M^{-1} [c; b] feeds the rank-one update of the embedded system.
    RVec gx(n), gy(m);
    msolve(sd.c, sd.b, gx, gy);
    const double hg = sd.c.dot(gx) + sd.b.dot(gy);
    if (1.0 + hg <= 0.0) throw RuntimeFailure("solve: embedded system is degenerate");

    const int nn = n + m + 1;
    RVec u = RVec::Zero(nn), v = RVec::Zero(nn);
    u(nn - 1) = 1.0;
    if (warm) {
        if (warm->x.size() != n || warm->y.size() != m || warm->s.size() != m)
            throw std::invalid_argument("solve: warm start dimension mismatch");
        u.head(n) = sd.rho_b * warm->x.cwiseQuotient(sd.e);
        u.segment(n, m) = sd.rho_c * warm->y.cwiseQuotient(sd.d);
        v.segment(n, m) = sd.rho_b * sd.d.cwiseProduct(warm->s);
    }

    TraceWriter trace(settings.debug_trace_path);
    const auto t0 = std::chrono::steady_clock::now();
    const double alpha = settings.relaxation;
    constexpr int kCheckEvery = 25;
    constexpr double kTauFloor = 1e-12;

    ConicSolution sol;
    RVec w(nn), ut(nn), z(nn), px(n), py(m);
    const auto unscale = [&](double tau, RVec& x, RVec& y, RVec& s) {
        const double t = std::max(tau, kTauFloor);
        x = sd.e.cwiseProduct(u.head(n)) / (sd.rho_b * t);
        y = sd.d.cwiseProduct(u.segment(n, m)) / (sd.rho_c * t);
        s = v.segment(n, m).cwiseQuotient(sd.d) / (sd.rho_b * t);
    };

    int iter = 0;
    for (iter = 1; iter <= settings.max_iter; ++iter) {
        w = u + v;
        msolve(w.head(n), w.segment(n, m), px, py);
        const double hp = sd.c.dot(px) + sd.b.dot(py);
        const double ztau = (w(nn - 1) + hp) / (1.0 + hg);
        ut.head(n) = px - ztau * gx;
        ut.segment(n, m) = py - ztau * gy;
        ut(nn - 1) = ztau;

        z = alpha * ut + (1.0 - alpha) * u - v;
        u = z;
        {
            RVec ypart = u.segment(n, m);
            project_onto_dual_cone(ypart, ix);
            u.segment(n, m) = ypart;
        }
        u(nn - 1) = std::max(u(nn - 1), 0.0);
        v = u - z;

        if (iter % kCheckEvery != 0 && iter != settings.max_iter) continue;

        const double tau = u(nn - 1);
        const double kappa = v(nn - 1);
        if (tau > kTauFloor) {
            unscale(tau, sol.x, sol.y, sol.s);
            const double raw_p = (prog.a * sol.x + sol.s - prog.b).norm();
            const double raw_d = (SpMat(prog.a.transpose()) * sol.y + prog.c).norm();
            const double cx = prog.c.dot(sol.x);
            const double by = prog.b.dot(sol.y);
            const double raw_g = std::abs(cx + by);
            sol.residuals = residuals(prog, sol.x, sol.y, sol.s);
            trace.row(iter, sol.residuals, tau, kappa);
            if (raw_p <= settings.eps_abs + settings.eps_rel * (1.0 + prog.b.norm()) &&
                raw_d <= settings.eps_abs + settings.eps_rel * (1.0 + prog.c.norm()) &&
                raw_g <= settings.eps_abs +
                             settings.eps_rel * (1.0 + std::abs(cx) + std::abs(by))) {
                sol.status = SolveStatus::optimal;
                sol.objective = cx;
                sol.iterations = iter;
                return sol;
            }
        } else {
            trace.row(iter, sol.residuals, tau, kappa);
        }

        // Farkas-type certificates are scale-free, so tau plays no role.
        RVec ydir = sd.d.cwiseProduct(u.segment(n, m)) / sd.rho_c;
        const double bydir = prog.b.dot(ydir);
        if (bydir < -1e-14) {
            ydir /= -bydir;
            const double viol = (SpMat(prog.a.transpose()) * ydir).norm();
            if (viol <= settings.eps_infeas) {
                unscale(u(nn - 1), sol.x, sol.y, sol.s);
                sol.status = SolveStatus::primal_infeasible;
                sol.certificate = ydir;
                sol.certificate_violation = viol;
                sol.iterations = iter;
                sol.residuals = residuals(prog, sol.x, sol.y, sol.s);
                return sol;
            }
        }
        RVec xdir = sd.e.cwiseProduct(u.head(n)) / sd.rho_b;
        const double cxdir = prog.c.dot(xdir);
        if (cxdir < -1e-14) {
            xdir /= -cxdir;
            RVec sp = -(prog.a * xdir);
            project_onto_cone(sp, ix);
            const double viol = (prog.a * xdir + sp).norm();
            if (viol <= settings.eps_infeas) {
                unscale(u(nn - 1), sol.x, sol.y, sol.s);
                sol.status = SolveStatus::dual_infeasible;
                sol.certificate = xdir;
                sol.certificate_violation = viol;
                sol.iterations = iter;
                sol.residuals = residuals(prog, sol.x, sol.y, sol.s);
                return sol;
            }
        }

        if (settings.time_limit_s) {
            const double elapsed =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (elapsed > *settings.time_limit_s) {
                unscale(u(nn - 1), sol.x, sol.y, sol.s);
                sol.status = SolveStatus::time_limit;
                sol.objective = prog.c.dot(sol.x);
                sol.iterations = iter;
                sol.residuals = residuals(prog, sol.x, sol.y, sol.s);
                return sol;
            }
        }
    }

    unscale(u(nn - 1), sol.x, sol.y, sol.s);
    sol.status = SolveStatus::max_iter;
    sol.objective = prog.c.dot(sol.x);
    sol.iterations = settings.max_iter;
    sol.residuals = residuals(prog, sol.x, sol.y, sol.s);
    return sol;
}

}  // namespace secfd
