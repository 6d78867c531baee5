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

#include "irsperf/analysis/gamma_fit.hpp"

#include "irsperf/errors.hpp"

#include <cmath>

namespace irsperf::analysis {

GammaFit fit_from_moments(const MomentSummary& moments, GammaTarget target)
{
    if (!(moments.mean > 0.0) || !(moments.variance > 0.0) || !std::isfinite(moments.variance)) {
        detail::throw_domain("fit_from_moments", "moment matching needs positive mean and variance");
    }
    return {moments.mean * moments.mean / moments.variance, moments.variance / moments.mean, target};
}

GammaFit fit_gamma_arbitrary(const LargeScaleFading& fading, std::size_t n)
{
    return fit_from_moments(moments_arbitrary(fading, n), GammaTarget::PowerX);
}

GammaFit fit_gamma_optimal(const LargeScaleFading& fading, std::size_t n)
{
    return fit_from_moments(moments_optimal(fading, n), GammaTarget::AmplitudeC);
}

}  // namespace irsperf::analysis
