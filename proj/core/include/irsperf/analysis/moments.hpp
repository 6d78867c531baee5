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

#include <cstddef>

namespace irsperf::analysis {

using channel::LargeScaleFading;

struct MomentSummary {
    double mean = 0.0;
    double second_moment = 0.0;
    double variance = 0.0;
};

/// Moments of X = |h_sd + h_sr^H Theta h_rd|^2 for any phase vector that is
/// independent of the channels (uniform random phases included):
///   E{X}   = b_sd + N b_sr b_rd
///   E{X^2} = 2 b_sd^2 + 4 N b_sd b_sr b_rd + (2N^2 + 2N) b_sr^2 b_rd^2
MomentSummary moments_arbitrary(const LargeScaleFading& fading, std::size_t n);

/// Gamma moment-match of one cascaded amplitude B_n = |[h_sr]_n| |[h_rd]_n|:
/// k_prod w_prod = E{B_n}, k_prod w_prod^2 = Var{B_n}.
struct ProductConstants {
    double k_prod = 0.0;
    double w_prod = 0.0;
};

ProductConstants product_constants(const LargeScaleFading& fading);

/// CDF of B_n: 1 - y K1(y) with y = 2 z / sqrt(b_sr b_rd). Defined for z >= 0.
double product_cdf(const LargeScaleFading& fading, double z);

/// PDF of B_n written with K0, K1 and K2 of y = 2 z / sqrt(b_sr b_rd). z > 0.
double product_pdf(const LargeScaleFading& fading, double z);

/// Moments of the coherent amplitude C = |h_sd| + sum_n B_n.
MomentSummary moments_optimal(const LargeScaleFading& fading, std::size_t n);

}  // namespace irsperf::analysis
