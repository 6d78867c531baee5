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

#include "irsperf/special/meijer_g.hpp"

#include "irsperf/errors.hpp"
#include "irsperf/special/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace irsperf::special {

namespace {

using cplx = std::complex<double>;

// G^{m,n}_{p,q}(x | a ; b) as a Mellin-Barnes integrand
//   prod_{j<m} Gamma(b_j - s) prod_{j<n} Gamma(1 - a_j + s)
//   / prod_{j>=m} Gamma(1 - b_j + s) / prod_{j>=n} Gamma(a_j - s) * x^s
struct Pattern {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<double> a;
    std::vector<double> b;
    double contour = -0.5;  // Re s on the integration line
};

cplx log_integrand(const Pattern& p, cplx s, double log_x)
{
    cplx acc = s * log_x;
    for (std::size_t j = 0; j < p.b.size(); ++j) {
        acc += j < p.m ? ln_gamma(p.b[j] - s) : -ln_gamma(1.0 - p.b[j] + s);
    }
    for (std::size_t j = 0; j < p.a.size(); ++j) {
        acc += j < p.n ? ln_gamma(1.0 - p.a[j] + s) : -ln_gamma(p.a[j] - s);
    }
    return acc;
}

// Contour for the patterns with poles of Gamma(1 + s) at -1, -2, ... on the
// left and a double pole at 0 on the right. Near 0 the integrand is large
// (~1/c^2) but x_eff^c stays small; balance the two.
double contour_between_minus_one_and_zero(double x_eff)
{
    if (x_eff >= std::exp(-2.0)) {
        return -0.5;
    }
    return -std::clamp(1.0 / std::log(1.0 / x_eff), 0.05, 0.5);
}

Pattern make_pattern(const MeijerGInstance& instance, double x)
{
    const double k = instance.shape;
    Pattern p;
    switch (instance.kind) {
        case MeijerGKind::Arbitrary:
            p.m = 3;
            p.n = 1;
            p.a = {0.0, 1.0};
            p.b = {0.0, 0.0, k};
            p.contour = contour_between_minus_one_and_zero(x / std::max(k, 1.0));
            break;
        case MeijerGKind::Optimal: {
            p.m = 5;
            p.n = 1;
            p.a = {0.0, 0.5, 1.0};
            p.b = {0.0, 0.0, 0.5, 0.5 * k, 0.5 * (k + 1.0)};
            const double kk = std::max(k, 1.0);
            p.contour = contour_between_minus_one_and_zero(4.0 * x / (kk * kk));
            break;
        }
        case MeijerGKind::UpperIncompleteGamma:
            p.m = 2;
            p.n = 0;
            p.a = {1.0};
            p.b = {0.0, k};
            // All poles lie at s >= 0; the saddle of Gamma(k - s) x^s sits near k - x.
            p.contour = std::min(-0.5, k - x);
            break;
    }
    return p;
}

}  // namespace

double log_meijer_g(const MeijerGInstance& instance, double x, const QuadratureSpec& spec)
{
    if (!(x > 0.0) || !std::isfinite(x)) {
        detail::throw_domain("meijer_g", "argument must be positive and finite, got " + std::to_string(x));
    }
    if (!(instance.shape > 0.0) || !std::isfinite(instance.shape)) {
        detail::throw_domain("meijer_g", "shape must be positive, got " + std::to_string(instance.shape));
    }
    spec.validate();

    const Pattern pattern = make_pattern(instance, x);
    const double log_x = std::log(x);
    const double c = pattern.contour;
    const double log_scale = log_integrand(pattern, cplx(c, 0.0), log_x).real();

    // Integrand normalised by its value at t = 0; by conjugate symmetry
    // G = (1/pi) * integral_0^inf Re f(c + i t) dt.
    auto scaled = [&](double t) {
        return std::exp(log_integrand(pattern, cplx(c, t), log_x) - log_scale);
    };

    // Walk out until the integrand magnitude stays below the truncation level.
    const double cutoff = spec.abs_tol * 1e-3;
    constexpr double kStep = 0.5;
    constexpr double kMaxHeight = 1e4;
    double height = 0.0;
    int quiet_steps = 0;
    while (quiet_steps < 4) {
        height += kStep;
        if (height > kMaxHeight) {
            throw NumericConvergenceError("meijer_g: integrand did not decay along the contour",
                                          std::abs(scaled(height)));
        }
        quiet_steps = std::abs(scaled(height)) < cutoff ? quiet_steps + 1 : 0;
    }

    QuadratureSpec inner = spec;
    inner.abs_tol = cutoff;
    inner.max_subdivisions = std::max<std::size_t>(spec.max_subdivisions, 1);
    const auto result = integrate_finite([&](double t) { return scaled(t).real(); }, 0.0, height, inner);

    if (!(result.value > 0.0) || result.error_estimate > 1e-3 * result.value) {
        std::ostringstream msg;
        msg << "meijer_g: contour integral lost precision (value " << result.value << ", error "
            << result.error_estimate << ")";
        throw NumericConvergenceError(msg.str(), result.error_estimate / std::abs(result.value));
    }
    return log_scale + std::log(result.value / std::numbers::pi);
}

double meijer_g(const MeijerGInstance& instance, double x, const QuadratureSpec& spec)
{
    return std::exp(log_meijer_g(instance, x, spec));
}

}  // namespace irsperf::special
