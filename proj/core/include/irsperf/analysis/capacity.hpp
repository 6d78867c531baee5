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

#include "irsperf/analysis/coverage.hpp"
#include "irsperf/special/quadrature.hpp"

#include <string_view>

namespace irsperf::analysis {

using special::QuadratureSpec;

/// Ergodic capacity from the Gamma fit by direct integration of the tail CDF:
///   arbitrary: 1/ln2 * int_0^inf Q(k_a, t sigma^2 / (rho w_a)) / (1 + t) dt
///   optimal:   1/ln2 * int_0^inf Q(k_o, sqrt(z) sigma / (sqrt(rho) w_o)) / (1 + z) dz
double ergodic_capacity_quadrature(PhasePolicy policy, const GammaFit& fit, const SnrConfig& snr,
                                   const QuadratureSpec& spec = {});

/// The same quantity in MeijerG form:
///   arbitrary: G^{3,1}_{2,3}(sigma^2 / (rho w_a) | 0,1 ; 0,0,k_a) / (Gamma(k_a) ln 2)
///   optimal:   2^{k_o - 1/2} / (Gamma(k_o) ln2 sqrt(2 pi))
///              * G^{5,1}_{3,5}(sigma^2 / (4 rho w_o^2) | 0,1/2,1 ; 0,0,1/2,k_o/2,(k_o+1)/2)
/// Propagates NumericConvergenceError from the contour integration.
double ergodic_capacity_closed(PhasePolicy policy, const GammaFit& fit, const SnrConfig& snr,
                               const QuadratureSpec& spec = {});

enum class EvaluationPath { MeijerG, Quadrature };

std::string_view to_string(EvaluationPath path) noexcept;

struct CapacityEvaluation {
    double value = 0.0;
    EvaluationPath path = EvaluationPath::MeijerG;
};

/// MeijerG form first; the tail-CDF integral if the contour does not converge.
CapacityEvaluation ergodic_capacity(PhasePolicy policy, const GammaFit& fit, const SnrConfig& snr,
                                    const QuadratureSpec& spec = {});

/// Jensen bounds log2(1 + (rho/sigma^2) E{gain}):
///   arbitrary: E{X}   = b_sd + N b_sr b_rd
///   optimal:   E{C^2} = b_sd + N k w^2 + N^2 k^2 w^2 + N k w sqrt(b_sd pi)
double capacity_upper_bound(PhasePolicy policy, const LargeScaleFading& fading, std::size_t n,
                            const SnrConfig& snr);

}  // namespace irsperf::analysis
