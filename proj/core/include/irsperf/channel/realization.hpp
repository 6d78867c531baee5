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

#include "irsperf/channel/scenario.hpp"
#include "irsperf/random.hpp"

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

namespace irsperf::channel {

/// One small-scale fading draw plus the IRS phase shifts applied to it.
/// `theta` stays empty until a phase policy has been applied.
struct ChannelRealization {
    std::complex<double> h_sd{};
    std::vector<std::complex<double>> h_sr;
    std::vector<std::complex<double>> h_rd;
    std::vector<double> theta;

    std::size_t n_elements() const noexcept { return h_sr.size(); }
    bool has_phases() const noexcept { return theta.size() == h_sr.size(); }
};

enum class PhasePolicy {
    Arbitrary,  // i.i.d. uniform phases on [-pi, pi]
    Optimal,    // every reflected path phase-aligned with h_sd
};

std::string_view to_string(PhasePolicy policy) noexcept;

/// Draws h_sd ~ CN(0, beta_sd), h_sr ~ CN(0, beta_sr I_N), h_rd ~ CN(0, beta_rd I_N)
/// from `rng` in that order, reusing the storage of `out`. Clears theta.
void sample_channels(const LargeScaleFading& fading, std::size_t n, RandomStream& rng,
                     ChannelRealization& out);

ChannelRealization sample_channels(const LargeScaleFading& fading, std::size_t n, RandomStream& rng);

/// Fills realization.theta. Only the Arbitrary policy consumes random numbers.
void apply_phase_policy(PhasePolicy policy, ChannelRealization& realization, RandomStream& rng);

/// Effective scalar channel h_sd + h_sr^H Theta h_rd. Requires phases.
std::complex<double> effective_channel(const ChannelRealization& realization);

/// |h_sd| + sum_n |[h_sr]_n| |[h_rd]_n|, the coherently combined amplitude.
double coherent_amplitude(const ChannelRealization& realization) noexcept;

/// log2(1 + (rho/sigma^2) * gain), computed without cancellation for small gains.
double capacity_from_gain(const SnrConfig& snr, double gain) noexcept;

/// log2(1 + (rho/sigma^2) |h_sd + h_sr^H Theta h_rd|^2) for the phases set
/// on the realization. Throws DomainError if no policy has been applied.
double instantaneous_capacity(const ChannelRealization& realization, const SnrConfig& snr);

/// Capacity under optimal phases written directly in channel magnitudes:
/// log2(1 + (rho/sigma^2) (|h_sd| + sum |h_sr,n| |h_rd,n|)^2).
double optimal_capacity(const ChannelRealization& realization, const SnrConfig& snr) noexcept;

}  // namespace irsperf::channel
