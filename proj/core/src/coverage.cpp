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

#include "irsperf/analysis/coverage.hpp"

#include "irsperf/errors.hpp"
#include "irsperf/special/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace irsperf::analysis {

namespace {

void require_target(const GammaFit& fit, GammaTarget target, const char* where)
{
    if (fit.target != target) {
        detail::throw_domain(where, "Gamma fit was matched to the other phase policy");
    }
}

}  // namespace

void CoverageQuery::validate() const
{
    if (!(threshold_rate >= 0.0) || !std::isfinite(threshold_rate)) {
        detail::throw_domain("CoverageQuery", "threshold rate must be finite and non-negative");
    }
    snr.validate();
}

double CoverageQuery::gain_threshold() const
{
    validate();
    const double ratio = snr.ratio();
    if (ratio > 1e15 || ratio < 1e-15) {
        // log-space: z = exp(ln(2^xi - 1) - ln(rho) + ln(sigma^2))
        if (threshold_rate == 0.0) return 0.0;
        const double log_excess = std::log(std::expm1(threshold_rate * std::numbers::ln2));
        return std::exp(log_excess - std::log(snr.rho_linear) + std::log(snr.sigma2_linear));
    }
    return std::expm1(threshold_rate * std::numbers::ln2) / ratio;
}

double coverage_arbitrary(const GammaFit& fit, const CoverageQuery& query)
{
    require_target(fit, GammaTarget::PowerX, "coverage_arbitrary");
    return special::reg_gamma_upper(fit.shape, query.gain_threshold() / fit.scale);
}

double coverage_optimal(const GammaFit& fit, const CoverageQuery& query)
{
    require_target(fit, GammaTarget::AmplitudeC, "coverage_optimal");
    return special::reg_gamma_upper(fit.shape, std::sqrt(query.gain_threshold()) / fit.scale);
}

double coverage(const GammaFit& fit, const CoverageQuery& query)
{
    return fit.target == GammaTarget::PowerX ? coverage_arbitrary(fit, query) : coverage_optimal(fit, query);
}

double coverage_asymptotic(PhasePolicy policy, const LargeScaleFading& fading, std::size_t n,
                           const CoverageQuery& query)
{
    if (n < 1) detail::throw_domain("coverage_asymptotic", "needs at least one IRS element");
    fading.validate();
    const double z = query.gain_threshold();
    const double nn = static_cast<double>(n);
    double value = 0.0;
    if (policy == PhasePolicy::Arbitrary) {
        value = 1.0 - z / (nn * fading.beta_sr * fading.beta_rd);
    } else {
        const auto [k, w] = product_constants(fading);
        value = 1.0 - std::sqrt(z) / (nn * nn * k * k * w * w);
    }
    return std::clamp(value, 0.0, 1.0);
}

double coverage_asymptotic_direct_limit(PhasePolicy policy, const LargeScaleFading& fading,
                                        std::size_t n, const CoverageQuery& query)
{
    if (n < 1) detail::throw_domain("coverage_asymptotic_direct_limit", "needs at least one IRS element");
    fading.validate();
    const double z = query.gain_threshold();
    const double nn = static_cast<double>(n);
    if (policy == PhasePolicy::Arbitrary) {
        return std::exp(-z / (nn * fading.beta_sr * fading.beta_rd));
    }
    const auto [k, w] = product_constants(fading);
    return special::reg_gamma_upper(nn * k, std::sqrt(z) / w);
}

}  // namespace irsperf::analysis
