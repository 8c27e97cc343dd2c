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

#include "sca.hpp"

namespace secfd {

// Full design: artificial noise, eavesdropper ceilings, and sidelobe cap.
DesignResult proposed_design(const ScenarioConfig& cfg, const ChannelSet& cs,
                             const Thresholds& th, const ScaSettings& settings = {});

// Ablation of the proposed design with the artificial-noise covariance
// pinned to zero; all other constraints kept, no power pinning.
DesignResult proposed_without_an(const ScenarioConfig& cfg, const ChannelSet& cs,
                                 const Thresholds& th, const ScaSettings& settings = {});

// Secure beamforming without artificial noise at a pinned total power
// (matched to the proposed design); the sidelobe cap is dropped.
DesignResult no_an_design(const ScenarioConfig& cfg, const ChannelSet& cs, const Thresholds& th,
                          double power_budget, const ScaSettings& settings = {});

// Two-stage benchmark: a communication-only power minimization (no
// eavesdropper ceilings, no sidelobe cap), then the remaining budget spread
// uniformly over transmit dimensions as isotropic artificial noise.
DesignResult isotropic_an_design(const ScenarioConfig& cfg, const ChannelSet& cs,
                                 const Thresholds& th, double power_budget,
                                 const ScaSettings& settings = {});

// Matched power level taken from a converged reference design.
double power_budget_from(const DesignResult& reference);

}  // namespace secfd
