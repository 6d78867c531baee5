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

#include "irsperf/analysis/moments.hpp"

#include "irsperf/errors.hpp"
#include "irsperf/special/bessel.hpp"

#include <cmath>
#include <numbers>

namespace irsperf::analysis {

namespace {
constexpr double kPi = std::numbers::pi;
}

MomentSummary moments_arbitrary(const LargeScaleFading& fading, std::size_t n)
{
    fading.validate();
    const double nn = static_cast<double>(n);
    const double bsd = fading.beta_sd;
    const double cascade = fading.beta_sr * fading.beta_rd;
    MomentSummary m;
    m.mean = bsd + nn * cascade;
    m.second_moment = 2.0 * bsd * bsd + 4.0 * nn * bsd * cascade + (2.0 * nn * nn + 2.0 * nn) * cascade * cascade;
    m.variance = bsd * bsd + 2.0 * nn * bsd * cascade + (nn * nn + 2.0 * nn) * cascade * cascade;
    return m;
}

ProductConstants product_constants(const LargeScaleFading& fading)
{
    fading.validate();
    const double root = std::sqrt(fading.beta_sr * fading.beta_rd);
    return {kPi * kPi / (16.0 - kPi * kPi), (4.0 - kPi * kPi / 4.0) * root / kPi};
}

double product_cdf(const LargeScaleFading& fading, double z)
{
    fading.validate();
    if (!(z >= 0.0)) detail::throw_domain("product_cdf", "amplitude must be non-negative");
    if (z == 0.0) return 0.0;
    const double y = 2.0 * z / std::sqrt(fading.beta_sr * fading.beta_rd);
    return 1.0 - y * special::bessel_k(1, y);
}

double product_pdf(const LargeScaleFading& fading, double z)
{
    fading.validate();
    if (!(z > 0.0)) detail::throw_domain("product_pdf", "amplitude must be positive");
    const double cascade = fading.beta_sr * fading.beta_rd;
    const double root = std::sqrt(cascade);
    const double y = 2.0 * z / root;
    return 2.0 * z / cascade * (special::bessel_k(2, y) + special::bessel_k(0, y)) -
           2.0 / root * special::bessel_k(1, y);
}

MomentSummary moments_optimal(const LargeScaleFading& fading, std::size_t n)
{
    const auto [k, w] = product_constants(fading);
    const double nn = static_cast<double>(n);
    const double bsd = fading.beta_sd;
    const double kw = k * w;
    MomentSummary m;
    m.mean = std::sqrt(kPi * bsd) / 2.0 + nn * kw;
    m.second_moment = bsd + nn * kw * (w + nn * kw + std::sqrt(bsd * kPi));
    m.variance = bsd + nn * kw * w - bsd * kPi / 4.0;
    return m;
}

}  // namespace irsperf::analysis
