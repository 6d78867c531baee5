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

#include "irsperf/special/quadrature.hpp"

namespace irsperf::special {

/// The fixed MeijerG parameter patterns the capacity closed forms need.
///
///   Arbitrary            G^{3,1}_{2,3}(x | 0, 1 ; 0, 0, k)
///   Optimal              G^{5,1}_{3,5}(x | 0, 1/2, 1 ; 0, 0, 1/2, k/2, (k+1)/2)
///   UpperIncompleteGamma G^{2,0}_{1,2}(x | 1 ; 0, k)  == Gamma(k, x)
enum class MeijerGKind { Arbitrary, Optimal, UpperIncompleteGamma };

struct MeijerGInstance {
    MeijerGKind kind = MeijerGKind::Arbitrary;
    double shape = 1.0;
};

/// ln G(x) for the given instance, by numerical Mellin-Barnes integration
/// along a vertical contour that separates the left and right pole families.
/// Working in logs keeps large shapes (Gamma(k) overflow) representable.
///
/// Throws DomainError for x <= 0 or shape <= 0, and NumericConvergenceError
/// (carrying the achieved error) if the contour integral does not converge.
double log_meijer_g(const MeijerGInstance& instance, double x, const QuadratureSpec& spec = {});

/// exp(log_meijer_g(...)); may overflow to +inf for very large shapes.
double meijer_g(const MeijerGInstance& instance, double x, const QuadratureSpec& spec = {});

}  // namespace irsperf::special
