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

#include "irsperf/monte_carlo.hpp"

#include "irsperf/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>

namespace irsperf::monte_carlo {

using channel::ChannelRealization;

namespace {

constexpr std::size_t kLeafTrials = 1024;

// Per-trial accumulation: adds this trial's contributions into acc[0..width).
using TrialKernel = std::function<void(std::uint32_t trial, double* acc)>;
using KernelFactory = std::function<TrialKernel()>;

// Pairwise sum of leaves [first, last) for one column.
double pairwise(const std::vector<double>& leaves, std::size_t width, std::size_t column, std::size_t first,
                std::size_t last)
{
    if (last - first == 1) return leaves[first * width + column];
    const std::size_t mid = first + (last - first) / 2;
    return pairwise(leaves, width, column, first, mid) + pairwise(leaves, width, column, mid, last);
}

std::vector<double> run_trials(std::size_t width, const SimConfig& sim, const KernelFactory& factory)
{
    sim.validate();
    const std::size_t n_leaves = (sim.trials + kLeafTrials - 1) / kLeafTrials;
    const std::size_t leaves_per_chunk = std::max<std::size_t>(1, (sim.chunk_size + kLeafTrials - 1) / kLeafTrials);
    const std::size_t n_chunks = (n_leaves + leaves_per_chunk - 1) / leaves_per_chunk;
    std::vector<double> leaves(n_leaves * width, 0.0);

    std::atomic<std::size_t> next_chunk{0};
    auto worker = [&] {
        const TrialKernel kernel = factory();
        for (std::size_t chunk = next_chunk++; chunk < n_chunks; chunk = next_chunk++) {
            const std::size_t leaf_end = std::min(n_leaves, (chunk + 1) * leaves_per_chunk);
            for (std::size_t leaf = chunk * leaves_per_chunk; leaf < leaf_end; ++leaf) {
                double* acc = &leaves[leaf * width];
                const std::size_t trial_end = std::min(sim.trials, (leaf + 1) * kLeafTrials);
                for (std::size_t t = leaf * kLeafTrials; t < trial_end; ++t) {
                    kernel(static_cast<std::uint32_t>(t), acc);
                }
            }
        }
    };

    std::size_t threads = sim.threads ? sim.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, n_chunks);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
    }

    std::vector<double> totals(width);
    for (std::size_t col = 0; col < width; ++col) {
        totals[col] = pairwise(leaves, width, col, 0, n_leaves);
    }
    return totals;
}

EmpiricalEstimate estimate(double sum, double sum_sq, std::size_t n)
{
    const double nn = static_cast<double>(n);
    const double mean = sum / nn;
    double var = n > 1 ? (sum_sq - nn * mean * mean) / (nn - 1.0) : 0.0;
    var = std::max(var, 0.0);
    return {mean, std::sqrt(var / nn), n};
}

MomentEstimate moment_estimate(const double* s, std::size_t n)
{
    const double nn = static_cast<double>(n);
    const double m1 = s[0] / nn;
    const double m2 = s[1] / nn;
    const double m3 = s[2] / nn;
    const double m4 = s[3] / nn;
    const double pop_var = std::max(m2 - m1 * m1, 0.0);
    const double central4 = m4 - 4.0 * m1 * m3 + 6.0 * m1 * m1 * m2 - 3.0 * m1 * m1 * m1 * m1;
    MomentEstimate out;
    out.mean = {m1, std::sqrt(pop_var / nn), n};
    out.second_moment = {m2, std::sqrt(std::max(m4 - m2 * m2, 0.0) / nn), n};
    out.variance = {n > 1 ? pop_var * nn / (nn - 1.0) : 0.0,
                    std::sqrt(std::max(central4 - pop_var * pop_var, 0.0) / nn), n};
    return out;
}

RandomStream channel_stream(const SimConfig& sim, std::uint32_t trial)
{
    return RandomStream(sim.seed, {StreamPurpose::Channel, sim.drop, trial});
}

RandomStream phase_stream(const SimConfig& sim, std::uint32_t trial)
{
    return RandomStream(sim.seed, {StreamPurpose::Phase, sim.drop, trial});
}

// Draws trial t's channels; if `arbitrary` also applies uniform random phases.
void draw(const Link& link, const SimConfig& sim, std::uint32_t trial, bool arbitrary, ChannelRealization& real)
{
    auto rng = channel_stream(sim, trial);
    channel::sample_channels(link.fading, link.n_elements, rng, real);
    if (arbitrary) {
        auto phases = phase_stream(sim, trial);
        channel::apply_phase_policy(PhasePolicy::Arbitrary, real, phases);
    }
}

void validate_link(const Link& link)
{
    link.fading.validate();
    link.snr.validate();
}

}  // namespace

void SimConfig::validate() const
{
    if (trials < 1) detail::throw_domain("SimConfig", "trials must be >= 1");
    if (trials > std::numeric_limits<std::uint32_t>::max()) {
        detail::throw_domain("SimConfig", "trials must fit the 32-bit trial counter");
    }
    if (chunk_size < 1) detail::throw_domain("SimConfig", "chunk_size must be >= 1");
}

CoverageByPolicy simulate_coverage_both(const Link& link, std::span<const double> thresholds, const SimConfig& sim)
{
    validate_link(link);
    if (thresholds.empty()) detail::throw_domain("simulate_coverage", "threshold list is empty");
    for (double xi : thresholds) {
        if (!(xi >= 0.0)) detail::throw_domain("simulate_coverage", "thresholds must be non-negative");
    }
    const std::vector<double> xi(thresholds.begin(), thresholds.end());
    const std::size_t m = xi.size();
    const auto totals = run_trials(2 * m, sim, [&]() -> TrialKernel {
        return [&, real = ChannelRealization{}](std::uint32_t t, double* acc) mutable {
            draw(link, sim, t, true, real);
            const double r_arb = channel::instantaneous_capacity(real, link.snr);
            const double r_opt = channel::optimal_capacity(real, link.snr);
            for (std::size_t j = 0; j < m; ++j) {
                acc[j] += r_arb >= xi[j] ? 1.0 : 0.0;
                acc[m + j] += r_opt >= xi[j] ? 1.0 : 0.0;
            }
        };
    });
    CoverageByPolicy out;
    for (std::size_t j = 0; j < m; ++j) {
        out.arbitrary.push_back(estimate(totals[j], totals[j], sim.trials));
        out.optimal.push_back(estimate(totals[m + j], totals[m + j], sim.trials));
    }
    return out;
}

std::vector<EmpiricalEstimate> simulate_coverage(const Link& link, PhasePolicy policy,
                                                 std::span<const double> thresholds, const SimConfig& sim)
{
    validate_link(link);
    if (thresholds.empty()) detail::throw_domain("simulate_coverage", "threshold list is empty");
    for (double xi : thresholds) {
        if (!(xi >= 0.0)) detail::throw_domain("simulate_coverage", "thresholds must be non-negative");
    }
    const std::vector<double> xi(thresholds.begin(), thresholds.end());
    const bool arbitrary = policy == PhasePolicy::Arbitrary;
    const auto totals = run_trials(xi.size(), sim, [&]() -> TrialKernel {
        return [&, real = ChannelRealization{}](std::uint32_t t, double* acc) mutable {
            draw(link, sim, t, arbitrary, real);
            const double r = arbitrary ? channel::instantaneous_capacity(real, link.snr)
                                       : channel::optimal_capacity(real, link.snr);
            for (std::size_t j = 0; j < xi.size(); ++j) {
                acc[j] += r >= xi[j] ? 1.0 : 0.0;
            }
        };
    });
    std::vector<EmpiricalEstimate> out;
    for (double hits : totals) out.push_back(estimate(hits, hits, sim.trials));
    return out;
}

CapacityByPolicy simulate_capacity_both(const Link& link, const SimConfig& sim)
{
    validate_link(link);
    const auto totals = run_trials(4, sim, [&]() -> TrialKernel {
        return [&, real = ChannelRealization{}](std::uint32_t t, double* acc) mutable {
            draw(link, sim, t, true, real);
            const double r_arb = channel::instantaneous_capacity(real, link.snr);
            const double r_opt = channel::optimal_capacity(real, link.snr);
            acc[0] += r_arb;
            acc[1] += r_arb * r_arb;
            acc[2] += r_opt;
            acc[3] += r_opt * r_opt;
        };
    });
    return {estimate(totals[0], totals[1], sim.trials), estimate(totals[2], totals[3], sim.trials)};
}

EmpiricalEstimate simulate_capacity(const Link& link, PhasePolicy policy, const SimConfig& sim)
{
    validate_link(link);
    const bool arbitrary = policy == PhasePolicy::Arbitrary;
    const auto totals = run_trials(2, sim, [&]() -> TrialKernel {
        return [&, real = ChannelRealization{}](std::uint32_t t, double* acc) mutable {
            draw(link, sim, t, arbitrary, real);
            const double r = arbitrary ? channel::instantaneous_capacity(real, link.snr)
                                       : channel::optimal_capacity(real, link.snr);
            acc[0] += r;
            acc[1] += r * r;
        };
    });
    return estimate(totals[0], totals[1], sim.trials);
}

MomentsOfXAndC empirical_moments_both(const Link& link, PhasePolicy policy, const SimConfig& sim)
{
    link.fading.validate();
    const bool arbitrary = policy == PhasePolicy::Arbitrary;
    const auto totals = run_trials(8, sim, [&]() -> TrialKernel {
        return [&, real = ChannelRealization{}](std::uint32_t t, double* acc) mutable {
            draw(link, sim, t, arbitrary, real);
            const double c = channel::coherent_amplitude(real);
            const double x = arbitrary ? std::norm(channel::effective_channel(real)) : c * c;
            const double x2 = x * x;
            const double c2 = c * c;
            acc[0] += x;
            acc[1] += x2;
            acc[2] += x2 * x;
            acc[3] += x2 * x2;
            acc[4] += c;
            acc[5] += c2;
            acc[6] += c2 * c;
            acc[7] += c2 * c2;
        };
    });
    return {moment_estimate(&totals[0], sim.trials), moment_estimate(&totals[4], sim.trials)};
}

MomentEstimate empirical_moments(const Link& link, PhasePolicy policy, Statistic statistic, const SimConfig& sim)
{
    const auto both = empirical_moments_both(link, policy, sim);
    return statistic == Statistic::PowerX ? both.x : both.c;
}

std::vector<double> sample_product_magnitudes(const channel::LargeScaleFading& fading, std::size_t count,
                                              const SimConfig& sim)
{
    fading.validate();
    constexpr std::size_t kPerRealization = 1024;
    std::vector<double> out;
    out.reserve(count);
    ChannelRealization real;
    for (std::uint32_t t = 0; out.size() < count; ++t) {
        auto rng = channel_stream(sim, t);
        const std::size_t n = std::min(kPerRealization, count - out.size());
        channel::sample_channels(fading, n, rng, real);
        for (std::size_t i = 0; i < n; ++i) {
            out.push_back(std::abs(real.h_sr[i]) * std::abs(real.h_rd[i]));
        }
    }
    return out;
}

}  // namespace irsperf::monte_carlo
