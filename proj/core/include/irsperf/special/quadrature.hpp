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

#include <cstddef>
#include <functional>

namespace irsperf::special {

/// Tolerances and budget for adaptive quadrature. The defaults sit far below
/// any Monte-Carlo noise floor this library is compared against.
struct QuadratureSpec {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    std::size_t max_subdivisions = 2000;

    /// Throws DomainError unless rel_tol > 0, abs_tol >= 0, max_subdivisions >= 1.
    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t subdivisions = 0;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 15-point Gauss-Kronrod on [a, b]. Throws
/// NumericConvergenceError once the subdivision budget is exhausted.
QuadratureResult integrate_finite(const Integrand& f, double a, double b,
                                  const QuadratureSpec& spec = {});

/// Integral over [0, inf) through t = u / (1 - u). f must be integrable
/// with a tail that decays at least exponentially.
QuadratureResult integrate_semi_infinite(const Integrand& f, const QuadratureSpec& spec = {});

}  // namespace irsperf::special
