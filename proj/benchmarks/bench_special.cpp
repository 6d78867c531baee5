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

#include "irsperf/special/bessel.hpp"
#include "irsperf/special/gamma.hpp"
#include "irsperf/special/meijer_g.hpp"

#include <benchmark/benchmark.h>

using namespace irsperf::special;

static void BM_LnGamma(benchmark::State& state)
{
    double x = 0.37;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ln_gamma(x));
        x = x < 500.0 ? x * 1.7 : 0.37;
    }
}
BENCHMARK(BM_LnGamma);

static void BM_RegGammaUpper(benchmark::State& state)
{
    const double k = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(reg_gamma_upper(k, 0.9 * k));
}
BENCHMARK(BM_RegGammaUpper)->Arg(1)->Arg(10)->Arg(100)->Arg(10000);

static void BM_BesselK(benchmark::State& state)
{
    const double x = state.range(0) / 10.0;
    for (auto _ : state) benchmark::DoNotOptimize(bessel_k(1, x));
}
BENCHMARK(BM_BesselK)->Arg(1)->Arg(10)->Arg(100);

static void BM_MeijerG(benchmark::State& state)
{
    const MeijerGInstance g{state.range(0) == 0 ? MeijerGKind::Arbitrary : MeijerGKind::Optimal,
                            static_cast<double>(state.range(1))};
    for (auto _ : state) benchmark::DoNotOptimize(log_meijer_g(g, 0.01));
}
BENCHMARK(BM_MeijerG)->ArgsProduct({{0, 1}, {1, 50, 5000}});
