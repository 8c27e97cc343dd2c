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

#include "conic.hpp"

namespace secfd {

struct SolverSettings {
    int max_iter = 50000;
    double eps_abs = 1e-7;
    double eps_rel = 1e-7;
    double eps_infeas = 1e-8;
    enum class Scaling { none, ruiz } scaling = Scaling::ruiz;
    std::optional<double> time_limit_s;
    // Over-relaxation parameter of the splitting iteration, in (0, 2).
    double relaxation = 1.5;
    // When nonempty, per-iteration residuals are appended as CSV here.
    std::string debug_trace_path;
};

enum class SolveStatus { optimal, primal_infeasible, dual_infeasible, max_iter, time_limit };

const char* to_string(SolveStatus s);

struct Residuals {
    double primal = 0.0;  // |A x + s - b| / (1 + |b|)
    double dual = 0.0;    // |A' y + c| / (1 + |c|)
    double gap = 0.0;     // |c'x + b'y| / (1 + |c'x| + |b'y|)
};

struct ConicSolution {
    SolveStatus status = SolveStatus::max_iter;
    RVec x;
    RVec y;
    RVec s;
    double objective = 0.0;  // c'x (primal) when optimal
    Residuals residuals;
    int iterations = 0;
    // status == primal_infeasible: certificate is y-shaped, in the dual
    // cone, with b'cert = -1 and |A' cert| = certificate_violation.
    // status == dual_infeasible: certificate is x-shaped with
    // c'cert = -1 and |A cert + proj_K(-A cert)| = certificate_violation.
    RVec certificate;
    double certificate_violation = 0.0;
};

// Optional initial iterate, given in problem (unscaled) coordinates.
struct WarmStart {
    RVec x;
    RVec y;
    RVec s;
};

// First-order operator splitting on the homogeneous self-dual embedding of
// the primal/dual pair. Deterministic: identical program and settings give
// identical iterates. Single-threaded; concurrent solves on distinct
// programs are safe.
ConicSolution solve(const ConicProgram& prog, const SolverSettings& settings = {},
                    const WarmStart* warm = nullptr);

// Eigenvalue clipping onto the PSD cone. Input is symmetrized first.
RMat project_psd(const RMat& m);

// Relative KKT residuals of an arbitrary primal/dual/slack triple.
Residuals residuals(const ConicProgram& prog, const RVec& x, const RVec& y, const RVec& s);

}  // namespace secfd
