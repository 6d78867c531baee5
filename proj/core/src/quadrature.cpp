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

#include "irsperf/special/quadrature.hpp"

#include "irsperf/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

namespace irsperf::special {

namespace {

// Kronrod 15-point abscissae and weights, embedded Gauss 7-point weights.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrod = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGauss = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod(const Integrand& f, double a, double b)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kKronrod[7];
    double gauss = fc * kGauss[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kNodes[j];
        const double sum = f(center - dx) + f(center + dx);
        kronrod += kKronrod[j] * sum;
        if (j % 2 == 1) {
            gauss += kGauss[j / 2] * sum;
        }
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

void QuadratureSpec::validate() const
{
    if (!(rel_tol > 0.0)) detail::throw_domain("QuadratureSpec", "rel_tol must be positive");
    if (!(abs_tol >= 0.0)) detail::throw_domain("QuadratureSpec", "abs_tol must be non-negative");
    if (max_subdivisions < 1) detail::throw_domain("QuadratureSpec", "max_subdivisions must be >= 1");
}

QuadratureResult integrate_finite(const Integrand& f, double a, double b, const QuadratureSpec& spec)
{
    spec.validate();
    if (a == b) return {};
    if (!(std::isfinite(a) && std::isfinite(b))) {
        detail::throw_domain("integrate_finite", "bounds must be finite");
    }

    std::priority_queue<Panel> panels;
    Panel first = gauss_kronrod(f, a, b);
    double total = first.value;
    double error = first.error;
    panels.push(first);
    std::size_t subdivisions = 1;

    auto converged = [&] { return error <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total)); };

    while (!converged()) {
        if (subdivisions >= spec.max_subdivisions) {
            std::ostringstream msg;
            msg << "integrate_finite: subdivision budget " << spec.max_subdivisions
                << " exhausted, error estimate " << error << " for value " << total;
            throw NumericConvergenceError(msg.str(), error);
        }
        const Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // Panel below floating-point resolution; its error cannot shrink further.
            throw NumericConvergenceError("integrate_finite: interval collapsed to roundoff", error);
        }
        const Panel left = gauss_kronrod(f, worst.a, mid);
        const Panel right = gauss_kronrod(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++subdivisions;
    }

    // Re-sum from the panels so the running updates leave no drift.
    double value = 0.0;
    double err = 0.0;
    std::vector<Panel> all;
    all.reserve(panels.size());
    while (!panels.empty()) {
        all.push_back(panels.top());
        panels.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
    for (const Panel& p : all) {
        value += p.value;
        err += p.error;
    }
    return {value, err, subdivisions};
}

QuadratureResult integrate_semi_infinite(const Integrand& f, const QuadratureSpec& spec)
{
    const Integrand mapped = [&f](double u) {
        const double one_minus = 1.0 - u;
        const double t = u / one_minus;
        if (!std::isfinite(t)) return 0.0;
        const double value = f(t);
        if (value == 0.0) return 0.0;
        return value / (one_minus * one_minus);
    };
    return integrate_finite(mapped, 0.0, 1.0, spec);
}

}  // namespace irsperf::special
