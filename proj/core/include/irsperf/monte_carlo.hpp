// SPDX-License-Identifier: Apache-2.0
//
// irsperf: coverage and ergodic capacity analysis of IRS-assisted links
// Copyright (C) 2026 The irsperf authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "irsperf/channel/realization.hpp"
#include "irsperf/channel/scenario.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace irsperf::monte_carlo {

using channel::Link;
using channel::PhasePolicy;

/// Trial count, seed and scheduling knobs of one simulation.
///
/// Trial t always draws its channel from substream (seed, Channel, drop, t)
/// and its random phases from (seed, Phase, drop, t); per-trial values are
/// summed in fixed leaf blocks and the leaves are combined by a fixed pairwise
/// tree. Results are therefore bit-identical for any chunk_size or thread count.
struct SimConfig {
    std::size_t trials = 100000;
    std::uint64_t seed = 20201005;
    std::size_t chunk_size = 16384;  // trials per scheduling unit (rounded to leaf blocks)
    std::size_t threads = 0;         // 0 = hardware concurrency
    std::uint32_t drop = 0;          // substream index for multi-drop experiments

    void validate() const;
};

struct EmpiricalEstimate {
    double mean = 0.0;
    double std_error = 0.0;  // sample standard deviation / sqrt(trials)
    std::size_t trials = 0;
};

/// Fraction of trials whose instantaneous capacity reaches each threshold.
/// One channel-sampling pass serves all thresholds.
std::vector<EmpiricalEstimate> simulate_coverage(const Link& link, PhasePolicy policy,
                                                 std::span<const double> thresholds, const SimConfig& sim);

struct CoverageByPolicy {
    std::vector<EmpiricalEstimate> arbitrary;
    std::vector<EmpiricalEstimate> optimal;
};

/// Both policies on the same channel draws (common random numbers).
CoverageByPolicy simulate_coverage_both(const Link& link, std::span<const double> thresholds,
                                        const SimConfig& sim);

/// Sample mean of the instantaneous capacity.
EmpiricalEstimate simulate_capacity(const Link& link, PhasePolicy policy, const SimConfig& sim);

struct CapacityByPolicy {
    EmpiricalEstimate arbitrary;
    EmpiricalEstimate optimal;
};

CapacityByPolicy simulate_capacity_both(const Link& link, const SimConfig& sim);

enum class Statistic {
    PowerX,      // |h_sd + h_sr^H Theta h_rd|^2 under the policy's phases
    AmplitudeC,  // |h_sd| + sum |h_sr,n| |h_rd,n|, independent of the phases
};

struct MomentEstimate {
    EmpiricalEstimate mean;
    EmpiricalEstimate second_moment;
    EmpiricalEstimate variance;
};

MomentEstimate empirical_moments(const Link& link, PhasePolicy policy, Statistic statistic,
                                 const SimConfig& sim);

struct MomentsOfXAndC {
    MomentEstimate x;
    MomentEstimate c;
};

/// Moments of X (under `policy`) and of C from a single pass.
MomentsOfXAndC empirical_moments_both(const Link& link, PhasePolicy policy, const SimConfig& sim);

/// `count` draws of B = |[h_sr]_n| |[h_rd]_n|, taken element-wise from
/// successive channel realizations. Returned in draw order.
std::vector<double> sample_product_magnitudes(const channel::LargeScaleFading& fading, std::size_t count,
                                              const SimConfig& sim);

}  // namespace irsperf::monte_carlo
