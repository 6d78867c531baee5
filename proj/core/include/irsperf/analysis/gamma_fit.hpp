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

#include "irsperf/analysis/moments.hpp"

namespace irsperf::analysis {

/// Which random variable a Gamma fit summarises.
enum class GammaTarget {
    PowerX,      // X = |h_sd + h_sr^H Theta h_rd|^2, arbitrary phases
    AmplitudeC,  // C = |h_sd| + sum_n B_n, optimal phases
};

/// Gamma(shape, scale) matched to the first two moments of its target:
/// shape * scale = mean, shape * scale^2 = variance.
struct GammaFit {
    double shape = 1.0;
    double scale = 1.0;
    GammaTarget target = GammaTarget::PowerX;
};

GammaFit fit_from_moments(const MomentSummary& moments, GammaTarget target);

GammaFit fit_gamma_arbitrary(const LargeScaleFading& fading, std::size_t n);
GammaFit fit_gamma_optimal(const LargeScaleFading& fading, std::size_t n);

}  // namespace irsperf::analysis
