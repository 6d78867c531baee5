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

#include "irsperf/special/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace irsperf::special {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;

cplx stirling(cplx z)
{
    constexpr std::array<double, 8> coeff = {
        1.0 / 12.0,        -1.0 / 360.0,        1.0 / 1260.0,       -1.0 / 1680.0,
        1.0 / 1188.0,      -691.0 / 360360.0,   1.0 / 156.0,        -3617.0 / 122400.0};
    const cplx inv = 1.0 / z;
    const cplx inv2 = inv * inv;
    cplx series = 0.0;
    cplx power = inv;
    for (double c : coeff) {
        series += c * power;
        power *= inv2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + series;
}

// ln sin(pi z), stable for large |Im z|.
cplx ln_sin_pi(cplx z)
{
    const double t = z.imag();
    if (std::abs(t) < 5.0) {
        return std::log(std::sin(kPi * z));
    }
    // For t > 0, sin(pi z) = e^{-i pi z} (1 - e^{2 i pi z}) / (2i), with |e^{2 i pi z}| = e^{-2 pi t}.
    if (t > 0.0) {
        const cplx small = std::exp(cplx(0.0, 2.0 * kPi) * z);
        return cplx(0.0, -kPi) * z + std::log(1.0 - small) - std::log(cplx(0.0, 2.0));
    }
    return std::conj(ln_sin_pi(std::conj(z)));
}

}  // namespace

std::complex<double> ln_gamma(std::complex<double> z)
{
    if (z.real() < 0.5) {
        // Reflection: Gamma(z) Gamma(1 - z) = pi / sin(pi z).
        return std::log(kPi) - ln_sin_pi(z) - ln_gamma(1.0 - z);
    }
    if (std::abs(z) >= 15.0) {
        return stirling(z);
    }
    cplx shifted = z;
    cplx log_product = 0.0;
    while (std::abs(shifted) < 15.0) {
        log_product += std::log(shifted);
        shifted += 1.0;
    }
    return stirling(shifted) - log_product;
}

}  // namespace irsperf::special
