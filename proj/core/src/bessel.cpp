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

#include "irsperf/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

namespace irsperf::special {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// K0 and K1 from the ascending series around 0 (x <= 2).
std::pair<double, double> k01_series(double x)
{
    const double q = 0.25 * x * x;
    const double log_half = std::log(0.5 * x);

    // I0, I1 and the digamma-weighted sums, accumulated together.
    double term0 = 1.0;  // q^j / (j!)^2
    double term1 = 1.0;  // q^j / (j! (j+1)!)
    double harmonic = 0.0;  // H_j
    double i0 = 1.0;
    double i1 = 1.0;
    double k0_sum = 0.0;
    // psi(j+1) + psi(j+2) = 2 H_j + 1/(j+1) - 2 gamma
    double k1_sum = 1.0 - 2.0 * std::numbers::egamma;
    for (int j = 1; j < 200; ++j) {
        term0 *= q / (static_cast<double>(j) * j);
        term1 *= q / (static_cast<double>(j) * (j + 1));
        harmonic += 1.0 / j;
        i0 += term0;
        i1 += term1;
        k0_sum += term0 * harmonic;
        k1_sum += term1 * (2.0 * harmonic + 1.0 / (j + 1) - 2.0 * std::numbers::egamma);
        if (term0 < kEps * i0 * 1e-2 && term1 < kEps * i1 * 1e-2) {
            break;
        }
    }
    i1 *= 0.5 * x;
    const double k0 = -(log_half + std::numbers::egamma) * i0 + k0_sum;
    const double k1 = 1.0 / x + i1 * log_half - 0.25 * x * k1_sum;
    return {k0, k1};
}

// Steed's continued fraction (CF2) for K0 and K1 at x > 2, order mu = 0.
std::pair<double, double> k01_continued_fraction(double x)
{
    const double a1 = 0.25;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    int i = 1;
    for (; i < 100000; ++i) {
        a -= 2 * i;
        c = -a * c / (i + 1.0);
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < kEps) {
            break;
        }
    }
    if (i == 100000) {
        throw NumericConvergenceError("bessel_k: continued fraction did not converge", 0.0);
    }
    h *= a1;
    const double k0 = std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) / s;
    const double k1 = k0 * (x + 0.5 - h) / x;
    return {k0, k1};
}

}  // namespace

double bessel_k(int order, double x)
{
    if (order < 0 || order > 2) {
        detail::throw_domain("bessel_k", "order must be 0, 1 or 2, got " + std::to_string(order));
    }
    if (!(x > 0.0) || std::isnan(x)) {
        detail::throw_domain("bessel_k", "argument must be positive, got " + std::to_string(x));
    }
    if (std::isinf(x)) {
        return 0.0;
    }
    const auto [k0, k1] = x <= 2.0 ? k01_series(x) : k01_continued_fraction(x);
    switch (order) {
        case 0: return k0;
        case 1: return k1;
        default: return k0 + 2.0 / x * k1;
    }
}

}  // namespace irsperf::special
