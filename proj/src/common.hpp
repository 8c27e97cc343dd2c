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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace secfd {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr const char* kVersion = "0.1.0";

inline double deg2rad(double deg) { return deg * kPi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / kPi; }

// Invalid or inconsistent configuration input (CLI exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Any failure past configuration validation (CLI exit code 3).
struct RuntimeFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// SplitMix64 finalizer; bijective 64-bit mix.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Independent per-trial substream seed: trial t is reproducible without
// generating trials 0..t-1 first.
inline std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
    return mix64(master_seed ^ mix64(0x5eC0FDULL + trial_index));
}

// Deterministic random source. Gaussian variates come from an explicit
// Box-Muller transform on raw engine output, so streams are bit-identical
// across standard library implementations (std::normal_distribution is not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform on [0, 1), 53-bit resolution.
    double uniform() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
        const double u2 = static_cast<double>(eng_() >> 11) * 0x1.0p-53;          // [0, 1)
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * kPi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // Circularly symmetric complex Gaussian, unit variance: E|z|^2 = 1.
    cplx cgaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return cplx(re, im) * std::sqrt(0.5);
    }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// (A + A^H) / 2; removes rounding-level Hermitian asymmetry.
inline CMat hermitize(const CMat& a) { return 0.5 * (a + a.adjoint()); }

// real(trace(A * B)); exact trace inner product for Hermitian A, B.
inline double trace_inner(const CMat& a, const CMat& b) {
    return a.cwiseProduct(b.transpose()).sum().real();
}

}  // namespace secfd
