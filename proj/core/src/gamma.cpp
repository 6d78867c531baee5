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

#include "irsperf/errors.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace irsperf::special {

namespace {

constexpr int kTaylorTerms = 40;

// zeta(k) - 1 for k = 0..kTaylorTerms (entries 0 and 1 unused). Direct sum
// up to n = 29 plus an Euler-Maclaurin tail.
std::array<double, kTaylorTerms + 1> make_zeta_minus_one()
{
    std::array<double, kTaylorTerms + 1> table{};
    constexpr double m = 30.0;
    for (int k = 2; k <= kTaylorTerms; ++k) {
        const double s = k;
        double sum = 0.0;
        for (int n = 29; n >= 2; --n) {
            sum += std::pow(static_cast<double>(n), -s);
        }
        const double tail = std::pow(m, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(m, -s) +
                            s / 12.0 * std::pow(m, -s - 1.0) -
                            s * (s + 1.0) * (s + 2.0) / 720.0 * std::pow(m, -s - 3.0) +
                            s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) / 30240.0 *
                                std::pow(m, -s - 5.0);
        table[k] = sum + tail;
    }
    return table;
}

const std::array<double, kTaylorTerms + 1>& zeta_minus_one()
{
    static const auto table = make_zeta_minus_one();
    return table;
}

// ln Gamma(2 + e) for |e| <= 0.5 from the Taylor series about 2.
double ln_gamma_near_two(double e)
{
    const auto& zeta = zeta_minus_one();
    double sum = 0.0;
    double power = e * e;
    for (int k = 2; k <= kTaylorTerms; ++k) {
        const double term = power * zeta[k] / k;
        sum += (k % 2 == 0) ? term : -term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) {
            break;
        }
        power *= e;
    }
    return (1.0 - std::numbers::egamma) * e + sum;
}

// Stirling series for x >= 15.
double ln_gamma_stirling(double x)
{
    constexpr std::array<double, 8> coeff = {
        1.0 / 12.0,        -1.0 / 360.0,        1.0 / 1260.0,       -1.0 / 1680.0,
        1.0 / 1188.0,      -691.0 / 360360.0,   1.0 / 156.0,        -3617.0 / 122400.0};
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double series = 0.0;
    double power = inv;
    for (double c : coeff) {
        series += c * power;
        power *= inv2;
    }
    return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) + series;
}

void require_shape(double k, double x, const char* where)
{
    if (!(k > 0.0) || !std::isfinite(k)) {
        detail::throw_domain(where, "shape must be positive and finite, got " + std::to_string(k));
    }
    if (!(x >= 0.0) || std::isnan(x)) {
        detail::throw_domain(where, "argument must be non-negative, got " + std::to_string(x));
    }
}

constexpr int kMaxIterations = 200000;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// P(k, x) by its power series; valid for any x, used for x < k + 1.
double lower_series(double k, double x)
{
    double term = 1.0 / k;
    double sum = term;
    for (int n = 1; n < kMaxIterations; ++n) {
        term *= x / (k + n);
        sum += term;
        if (std::abs(term) < std::abs(sum) * kEps) {
            return sum * std::exp(k * std::log(x) - x - ln_gamma(k));
        }
    }
    throw NumericConvergenceError("reg_gamma: series did not converge", std::abs(term / sum));
}

// Q(k, x) by the modified Lentz continued fraction; used for x >= k + 1.
double upper_continued_fraction(double k, double x)
{
    constexpr double tiny = std::numeric_limits<double>::min() / kEps;
    double b = x + 1.0 - k;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < kMaxIterations; ++i) {
        const double an = -i * (i - k);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kEps) {
            return std::exp(k * std::log(x) - x - ln_gamma(k)) * h;
        }
    }
    throw NumericConvergenceError("reg_gamma: continued fraction did not converge", 0.0);
}

}  // namespace

double ln_gamma(double x)
{
    if (!(x > 0.0) || !std::isfinite(x)) {
        detail::throw_domain("ln_gamma", "argument must be positive and finite, got " + std::to_string(x));
    }
    if (x >= 15.0) {
        return ln_gamma_stirling(x);
    }
    if (x < 0.5) {
        return ln_gamma(x + 1.0) - std::log(x);
    }
    if (x < 1.5) {
        // Gamma(x) = Gamma(x + 1) / x, written around x = 1 to keep the zero exact.
        const double e = x - 1.0;
        return ln_gamma_near_two(e) - std::log1p(e);
    }
    if (x < 2.5) {
        return ln_gamma_near_two(x - 2.0);
    }
    // Reduce to [1.5, 2.5) by the downward recurrence.
    double y = x;
    double product = 1.0;
    while (y >= 2.5) {
        y -= 1.0;
        product *= y;
    }
    return ln_gamma_near_two(y - 2.0) + std::log(product);
}

double reg_gamma_upper(double k, double x)
{
    require_shape(k, x, "reg_gamma_upper");
    if (x == 0.0) return 1.0;
    if (std::isinf(x)) return 0.0;
    if (x < k + 1.0) return 1.0 - lower_series(k, x);
    return upper_continued_fraction(k, x);
}

double reg_gamma_lower(double k, double x)
{
    require_shape(k, x, "reg_gamma_lower");
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    if (x < k + 1.0) return lower_series(k, x);
    return 1.0 - upper_continued_fraction(k, x);
}

}  // namespace irsperf::special
