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

#include "irsperf/analysis/capacity.hpp"

#include "irsperf/errors.hpp"
#include "irsperf/special/gamma.hpp"
#include "irsperf/special/meijer_g.hpp"

#include <cmath>
#include <numbers>

namespace irsperf::analysis {

namespace {

constexpr double kLn2 = std::numbers::ln2;

GammaTarget target_for(PhasePolicy policy)
{
    return policy == PhasePolicy::Optimal ? GammaTarget::AmplitudeC : GammaTarget::PowerX;
}

void require_match(PhasePolicy policy, const GammaFit& fit, const char* where)
{
    if (fit.target != target_for(policy)) {
        detail::throw_domain(where, "Gamma fit does not match the phase policy");
    }
    if (!(fit.shape > 0.0) || !(fit.scale > 0.0)) {
        detail::throw_domain(where, "Gamma fit parameters must be positive");
    }
}

// int_0^inf tail(t) / (1 + t) dt, split at t = 1 with t = e^u above it so
// that tails spread over many decades stay cheap to resolve.
double tail_integral(const special::Integrand& tail, const QuadratureSpec& spec)
{
    const auto head = special::integrate_finite([&](double t) { return tail(t) / (1.0 + t); }, 0.0, 1.0, spec);
    const auto rest = special::integrate_semi_infinite(
        [&](double u) {
            const double t = std::exp(u);
            if (!std::isfinite(t)) return 0.0;
            return tail(t) / (1.0 + 1.0 / t);
        },
        spec);
    return head.value + rest.value;
}

}  // namespace

std::string_view to_string(EvaluationPath path) noexcept
{
    return path == EvaluationPath::MeijerG ? "meijer_g" : "quadrature";
}

double ergodic_capacity_quadrature(PhasePolicy policy, const GammaFit& fit, const SnrConfig& snr,
                                   const QuadratureSpec& spec)
{
    require_match(policy, fit, "ergodic_capacity_quadrature");
    snr.validate();
    const double k = fit.shape;
    if (policy == PhasePolicy::Arbitrary) {
        const double x = snr.sigma2_linear / (snr.rho_linear * fit.scale);
        return tail_integral([&](double t) { return special::reg_gamma_upper(k, t * x); }, spec) / kLn2;
    }
    const double y = std::sqrt(snr.sigma2_linear / snr.rho_linear) / fit.scale;
    return tail_integral([&](double z) { return special::reg_gamma_upper(k, std::sqrt(z) * y); }, spec) / kLn2;
}

double ergodic_capacity_closed(PhasePolicy policy, const GammaFit& fit, const SnrConfig& snr,
                               const QuadratureSpec& spec)
{
    require_match(policy, fit, "ergodic_capacity_closed");
    snr.validate();
    const double k = fit.shape;
    if (policy == PhasePolicy::Arbitrary) {
        const double x = snr.sigma2_linear / (snr.rho_linear * fit.scale);
        const double log_g = special::log_meijer_g({special::MeijerGKind::Arbitrary, k}, x, spec);
        return std::exp(log_g - special::ln_gamma(k)) / kLn2;
    }
    const double x = snr.sigma2_linear / (4.0 * snr.rho_linear * fit.scale * fit.scale);
    const double log_g = special::log_meijer_g({special::MeijerGKind::Optimal, k}, x, spec);
    const double log_prefactor =
        (k - 0.5) * kLn2 - special::ln_gamma(k) - 0.5 * std::log(2.0 * std::numbers::pi);
    return std::exp(log_g + log_prefactor) / kLn2;
}

CapacityEvaluation ergodic_capacity(PhasePolicy policy, const GammaFit& fit, const SnrConfig& snr,
                                    const QuadratureSpec& spec)
{
    try {
        return {ergodic_capacity_closed(policy, fit, snr, spec), EvaluationPath::MeijerG};
    } catch (const NumericConvergenceError&) {
        return {ergodic_capacity_quadrature(policy, fit, snr, spec), EvaluationPath::Quadrature};
    }
}

double capacity_upper_bound(PhasePolicy policy, const LargeScaleFading& fading, std::size_t n,
                            const SnrConfig& snr)
{
    snr.validate();
    const double mean_gain = policy == PhasePolicy::Arbitrary ? moments_arbitrary(fading, n).mean
                                                              : moments_optimal(fading, n).second_moment;
    return channel::capacity_from_gain(snr, mean_gain);
}

}  // namespace irsperf::analysis
