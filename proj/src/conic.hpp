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

#include <Eigen/Sparse>

#include <string>
#include <vector>

#include "common.hpp"

namespace secfd {

using SpMat = Eigen::SparseMatrix<double>;

// Ordered cone blocks of the slack vector: equalities first, then
// nonnegative rows, then symmetric PSD blocks stored in scaled
// lower-triangle form (svec).
struct ConeSpec {
    int n_zero = 0;
    int n_nonneg = 0;
    std::vector<int> psd_sides;

    int total_rows() const;
};

// Standard form: minimize c'x subject to A x + s = b, s in K.
// K = {0}^n_zero x R+^n_nonneg x PSD(side_1) x ... x PSD(side_k).
struct ConicProgram {
    RVec c;
    SpMat a;
    RVec b;
    ConeSpec cones;

    int n() const { return static_cast<int>(c.size()); }
    int m() const { return static_cast<int>(b.size()); }
    // Throws RuntimeFailure when dimensions and cone_spec disagree.
    void check_shape() const;
};

// Scaled lower-triangle vectorization of a d x d symmetric matrix:
// column-major lower triangle, off-diagonal entries times sqrt(2), so that
// svec(X) . svec(Y) = trace(X Y).
int svec_dim(int d);
int svec_index(int i, int j, int d);  // requires i >= j
RVec svec(const RMat& s);
RMat unsvec(const RVec& v, int d);

// Self-describing text dump (header, cone spec, dense vectors, COO
// triplets). Floating point is written as C hex literals, so a dump/load
// round trip is bit exact.
void dump_program(const ConicProgram& prog, const std::string& path);
ConicProgram load_program(const std::string& path);

}  // namespace secfd
