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

#include "conic.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace secfd {

int ConeSpec::total_rows() const {
    int m = n_zero + n_nonneg;
    for (int d : psd_sides) m += svec_dim(d);
    return m;
}

void ConicProgram::check_shape() const {
    if (a.rows() != m() || a.cols() != n())
        throw RuntimeFailure("conic program: constraint matrix shape mismatch");
    if (cones.total_rows() != m())
        throw RuntimeFailure("conic program: cone spec does not cover all rows");
    if (cones.n_zero < 0 || cones.n_nonneg < 0)
        throw RuntimeFailure("conic program: negative cone dimension");
    for (int d : cones.psd_sides)
        if (d < 1) throw RuntimeFailure("conic program: PSD side must be >= 1");
}

int svec_dim(int d) { return d * (d + 1) / 2; }

int svec_index(int i, int j, int d) {
    return j * d - j * (j - 1) / 2 + (i - j);
}

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

RVec svec(const RMat& s) {
    const int d = static_cast<int>(s.rows());
    RVec v(svec_dim(d));
    int idx = 0;
    for (int j = 0; j < d; ++j) {
        v(idx++) = s(j, j);
        for (int i = j + 1; i < d; ++i) v(idx++) = kSqrt2 * s(i, j);
    }
    return v;
}

RMat unsvec(const RVec& v, int d) {
    RMat s(d, d);
    int idx = 0;
    for (int j = 0; j < d; ++j) {
        s(j, j) = v(idx++);
        for (int i = j + 1; i < d; ++i) {
            const double x = v(idx++) / kSqrt2;
            s(i, j) = x;
            s(j, i) = x;
        }
    }
    return s;
}

namespace {

std::string hex(double x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%a", x);
    return buf;
}

double parse_hex(const std::string& tok, const char* what) {
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0')
        throw RuntimeFailure(std::string("conic dump: bad number in ") + what);
    return v;
}

}  // namespace

void dump_program(const ConicProgram& prog, const std::string& path) {
    prog.check_shape();
    std::ofstream out(path);
    if (!out) throw RuntimeFailure("cannot write conic dump: " + path);
    out << "secfd-conic 1\n";
    out << "dims " << prog.n() << " " << prog.m() << "\n";
    out << "cones zero " << prog.cones.n_zero << " nonneg " << prog.cones.n_nonneg << " psd "
        << prog.cones.psd_sides.size();
    for (int d : prog.cones.psd_sides) out << " " << d;
    out << "\n";
    out << "c";
    for (int i = 0; i < prog.n(); ++i) out << " " << hex(prog.c(i));
    out << "\nb";
    for (int i = 0; i < prog.m(); ++i) out << " " << hex(prog.b(i));
    out << "\nA " << prog.a.nonZeros() << "\n";
    for (int k = 0; k < prog.a.outerSize(); ++k)
        for (SpMat::InnerIterator it(prog.a, k); it; ++it)
            out << it.row() << " " << it.col() << " " << hex(it.value()) << "\n";
    out << "end\n";
    if (!out) throw RuntimeFailure("failed while writing conic dump: " + path);
}

ConicProgram load_program(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RuntimeFailure("cannot open conic dump: " + path);
    std::string tok;
    auto need = [&](const char* expect) {
        if (!(in >> tok) || tok != expect)
            throw RuntimeFailure(std::string("conic dump: expected '") + expect + "'");
    };

    need("secfd-conic");
    int version;
    if (!(in >> version) || version != 1) throw RuntimeFailure("conic dump: unsupported version");

    ConicProgram prog;
    int n, m;
    need("dims");
    if (!(in >> n >> m) || n < 0 || m < 0) throw RuntimeFailure("conic dump: bad dims");

    need("cones");
    need("zero");
    in >> prog.cones.n_zero;
    need("nonneg");
    in >> prog.cones.n_nonneg;
    need("psd");
    size_t n_psd;
    in >> n_psd;
    prog.cones.psd_sides.resize(n_psd);
    for (auto& d : prog.cones.psd_sides) in >> d;
    if (!in) throw RuntimeFailure("conic dump: bad cone spec");

    need("c");
    prog.c.resize(n);
    for (int i = 0; i < n; ++i) {
        in >> tok;
        prog.c(i) = parse_hex(tok, "c");
    }
    need("b");
    prog.b.resize(m);
    for (int i = 0; i < m; ++i) {
        in >> tok;
        prog.b(i) = parse_hex(tok, "b");
    }

    need("A");
    std::int64_t nnz;
    if (!(in >> nnz) || nnz < 0) throw RuntimeFailure("conic dump: bad nnz");
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<size_t>(nnz));
    for (std::int64_t k = 0; k < nnz; ++k) {
        int r, c;
        if (!(in >> r >> c >> tok)) throw RuntimeFailure("conic dump: truncated triplets");
        if (r < 0 || r >= m || c < 0 || c >= n)
            throw RuntimeFailure("conic dump: triplet out of range");
        trips.emplace_back(r, c, parse_hex(tok, "A"));
    }
    need("end");

    prog.a.resize(m, n);
    prog.a.setFromTriplets(trips.begin(), trips.end());
    prog.check_shape();
    return prog;
}

}  // namespace secfd
