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

#include "irsperf/channel/realization.hpp"

#include "irsperf/errors.hpp"

#include <cmath>
#include <numbers>

namespace irsperf::channel {

std::string_view to_string(PhasePolicy policy) noexcept
{
    return policy == PhasePolicy::Optimal ? "optimal" : "arbitrary";
}

void sample_channels(const LargeScaleFading& fading, std::size_t n, RandomStream& rng,
                     ChannelRealization& out)
{
    out.h_sd = rng.complex_normal(fading.beta_sd);
    out.h_sr.resize(n);
    out.h_rd.resize(n);
    for (auto& h : out.h_sr) h = rng.complex_normal(fading.beta_sr);
    for (auto& h : out.h_rd) h = rng.complex_normal(fading.beta_rd);
    out.theta.clear();
}

ChannelRealization sample_channels(const LargeScaleFading& fading, std::size_t n, RandomStream& rng)
{
    ChannelRealization out;
    sample_channels(fading, n, rng, out);
    return out;
}

void apply_phase_policy(PhasePolicy policy, ChannelRealization& realization, RandomStream& rng)
{
    const std::size_t n = realization.n_elements();
    if (realization.h_rd.size() != n) {
        detail::throw_domain("apply_phase_policy", "h_sr and h_rd lengths differ");
    }
    realization.theta.resize(n);
    if (policy == PhasePolicy::Arbitrary) {
        std::size_t i = 0;
        for (; i + 1 < n; i += 2) {
            const auto [u1, u2] = rng.uniform_pair();
            realization.theta[i] = std::numbers::pi * (2.0 * u1 - 1.0);
            realization.theta[i + 1] = std::numbers::pi * (2.0 * u2 - 1.0);
        }
        if (i < n) {
            realization.theta[i] = std::numbers::pi * (2.0 * rng.uniform() - 1.0);
        }
        return;
    }
    // theta_n = arg(h_sd) - arg(conj(h_sr,n)) - arg(h_rd,n), wrapped into [-pi, pi].
    const double ref = std::arg(realization.h_sd);
    for (std::size_t i = 0; i < n; ++i) {
        const double raw = ref + std::arg(realization.h_sr[i]) - std::arg(realization.h_rd[i]);
        realization.theta[i] = std::remainder(raw, 2.0 * std::numbers::pi);
    }
}

std::complex<double> effective_channel(const ChannelRealization& realization)
{
    if (!realization.has_phases()) {
        detail::throw_domain("effective_channel", "phase shifts have not been applied");
    }
    std::complex<double> reflected{};
    for (std::size_t i = 0; i < realization.n_elements(); ++i) {
        reflected += std::conj(realization.h_sr[i]) * std::polar(1.0, realization.theta[i]) *
                     realization.h_rd[i];
    }
    return realization.h_sd + reflected;
}

double coherent_amplitude(const ChannelRealization& realization) noexcept
{
    double sum = 0.0;
    for (std::size_t i = 0; i < realization.n_elements(); ++i) {
        sum += std::sqrt(std::norm(realization.h_sr[i]) * std::norm(realization.h_rd[i]));
    }
    return std::abs(realization.h_sd) + sum;
}

double capacity_from_gain(const SnrConfig& snr, double gain) noexcept
{
    return std::log1p(snr.ratio() * gain) / std::numbers::ln2;
}

double instantaneous_capacity(const ChannelRealization& realization, const SnrConfig& snr)
{
    return capacity_from_gain(snr, std::norm(effective_channel(realization)));
}

double optimal_capacity(const ChannelRealization& realization, const SnrConfig& snr) noexcept
{
    const double amplitude = coherent_amplitude(realization);
    return capacity_from_gain(snr, amplitude * amplitude);
}

}  // namespace irsperf::channel
