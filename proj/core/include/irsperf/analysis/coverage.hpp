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

#include "irsperf/analysis/gamma_fit.hpp"
#include "irsperf/channel/realization.hpp"

namespace irsperf::analysis {

using channel::PhasePolicy;
using channel::SnrConfig;

/// Rate requirement xi [b/s/Hz] at a given power budget.
struct CoverageQuery {
    double threshold_rate = 0.0;
    SnrConfig snr;

    void validate() const;

    /// Equivalent channel-gain requirement z = sigma^2 (2^xi - 1) / rho.
    double gain_threshold() const;
};

/// Pr(R >= xi) with X ~ Gamma(k_a, w_a): Q(k_a, z / w_a).
double coverage_arbitrary(const GammaFit& fit, const CoverageQuery& query);

/// Pr(R >= xi) with C ~ Gamma(k_o, w_o) and R driven by C^2: Q(k_o, sqrt(z) / w_o).
double coverage_optimal(const GammaFit& fit, const CoverageQuery& query);

/// Dispatches on the fit target.
double coverage(const GammaFit& fit, const CoverageQuery& query);

/// Large-N approximations, clamped to [0, 1]:
///   Arbitrary: 1 - z / (N b_sr b_rd)
///   Optimal:   1 - sqrt(z) / (N^2 k^2 w^2)   with (k, w) = product_constants
/// Requires n >= 1.
double coverage_asymptotic(PhasePolicy policy, const LargeScaleFading& fading, std::size_t n,
                           const CoverageQuery& query);

/// Diagnostic variant that plugs the literal N -> inf limits of the fitted
/// parameters into the Gamma tail: (1, N b_sr b_rd) for arbitrary phases and
/// (N k, w) for optimal phases. Not used by any experiment.
double coverage_asymptotic_direct_limit(PhasePolicy policy, const LargeScaleFading& fading,
                                        std::size_t n, const CoverageQuery& query);

}  // namespace irsperf::analysis
