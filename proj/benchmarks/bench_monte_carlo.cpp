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

#include <benchmark/benchmark.h>

using namespace irsperf;

// Simulated capacity for both policies; items are element-trials.
static void BM_SimulateCapacity(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const channel::Link link{{1.0, 1.0, 1.0}, n, {10.0, 1.0}};
    monte_carlo::SimConfig sim;
    sim.trials = 4096;
    sim.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(monte_carlo::simulate_capacity_both(link, sim));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(sim.trials * n));
}
BENCHMARK(BM_SimulateCapacity)->Arg(16)->Arg(256)->Unit(benchmark::kMillisecond);
