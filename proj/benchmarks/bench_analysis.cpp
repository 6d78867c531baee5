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

#include "irsperf/analysis/capacity.hpp"
#include "irsperf/analysis/coverage.hpp"
#include "irsperf/analysis/gamma_fit.hpp"

#include <benchmark/benchmark.h>

using namespace irsperf;
using channel::PhasePolicy;

namespace {

analysis::GammaFit fit_for(PhasePolicy policy, double shape)
{
    return {shape, 1.0, policy == PhasePolicy::Optimal ? analysis::GammaTarget::AmplitudeC : analysis::GammaTarget::PowerX};
}

}  // namespace

// Closed form versus direct tail integral for the same capacity.
static void BM_CapacityClosed(benchmark::State& state)
{
    const auto policy = state.range(0) == 0 ? PhasePolicy::Arbitrary : PhasePolicy::Optimal;
    const auto fit = fit_for(policy, 20.0);
    const channel::SnrConfig snr{100.0, 1.0};
    for (auto _ : state) benchmark::DoNotOptimize(analysis::ergodic_capacity_closed(policy, fit, snr));
}
BENCHMARK(BM_CapacityClosed)->Arg(0)->Arg(1);

static void BM_CapacityQuadrature(benchmark::State& state)
{
    const auto policy = state.range(0) == 0 ? PhasePolicy::Arbitrary : PhasePolicy::Optimal;
    const auto fit = fit_for(policy, 20.0);
    const channel::SnrConfig snr{100.0, 1.0};
    for (auto _ : state) benchmark::DoNotOptimize(analysis::ergodic_capacity_quadrature(policy, fit, snr));
}
BENCHMARK(BM_CapacityQuadrature)->Arg(0)->Arg(1);

static void BM_Coverage(benchmark::State& state)
{
    const auto fit = fit_for(PhasePolicy::Optimal, 400.0);
    const analysis::CoverageQuery q{3.0, {1e6, 1.0}};
    for (auto _ : state) benchmark::DoNotOptimize(analysis::coverage_optimal(fit, q));
}
BENCHMARK(BM_Coverage);
