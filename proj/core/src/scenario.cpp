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

#include "irsperf/channel/scenario.hpp"

#include "irsperf/errors.hpp"

#include <cmath>
#include <string>

namespace irsperf::channel {

namespace {

void require(bool ok, const char* where, const std::string& what)
{
    if (!ok) detail::throw_domain(where, what);
}

double beta_db(const PathLossModel& model, double exponent, double d, double shadow)
{
    require(d > 0.0, "compute_large_scale", "link distance must be positive");
    return model.gt_dbi + model.gr_dbi - 10.0 * exponent * std::log10(d) + model.offset_db + shadow;
}

}  // namespace

double distance(Point2 a, Point2 b) noexcept
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

void Scenario::validate() const
{
    require(distance(source_pos, irs_pos) > 0.0, "Scenario", "source and IRS coincide");
    require(distance(source_pos, dest_pos) > 0.0, "Scenario", "source and destination coincide");
    require(distance(irs_pos, dest_pos) > 0.0, "Scenario", "IRS and destination coincide");
    require(std::isfinite(tx_power_dbm), "Scenario", "tx_power_dbm must be finite");
    require(std::isfinite(noise_dbm), "Scenario", "noise_dbm must be finite");
    require(shadowing_std_db >= 0.0 && std::isfinite(shadowing_std_db), "Scenario",
            "shadowing_std_db must be finite and non-negative");
}

void PathLossModel::validate() const
{
    require(exponent_sd > 0.0 && exponent_sr > 0.0 && exponent_rd > 0.0, "PathLossModel",
            "path-loss exponents must be positive");
    require(std::isfinite(gt_dbi) && std::isfinite(gr_dbi) && std::isfinite(offset_db),
            "PathLossModel", "gains and offset must be finite");
}

void LargeScaleFading::validate() const
{
    auto ok = [](double b) { return b > 0.0 && std::isfinite(b); };
    require(ok(beta_sd) && ok(beta_sr) && ok(beta_rd), "LargeScaleFading",
            "all betas must be positive and finite");
}

void SnrConfig::validate() const
{
    require(rho_linear > 0.0 && std::isfinite(rho_linear), "SnrConfig", "rho must be positive");
    require(sigma2_linear > 0.0 && std::isfinite(sigma2_linear), "SnrConfig", "sigma^2 must be positive");
}

double db_to_linear(double db) noexcept
{
    return std::pow(10.0, db / 10.0);
}

double linear_to_db(double linear) noexcept
{
    return 10.0 * std::log10(linear);
}

LargeScaleFading compute_large_scale(const Scenario& scenario, const PathLossModel& model,
                                     const ShadowDraws& shadow_db)
{
    model.validate();
    const double d_sd = distance(scenario.source_pos, scenario.dest_pos);
    const double d_sr = distance(scenario.source_pos, scenario.irs_pos);
    const double d_rd = distance(scenario.irs_pos, scenario.dest_pos);
    return {db_to_linear(beta_db(model, model.exponent_sd, d_sd, shadow_db[0])),
            db_to_linear(beta_db(model, model.exponent_sr, d_sr, shadow_db[1])),
            db_to_linear(beta_db(model, model.exponent_rd, d_rd, shadow_db[2]))};
}

SnrConfig snr_config(const Scenario& scenario)
{
    return {db_to_linear(scenario.tx_power_dbm), db_to_linear(scenario.noise_dbm)};
}

Link make_link(const Scenario& scenario, const PathLossModel& model, const ShadowDraws& shadow_db)
{
    scenario.validate();
    return {compute_large_scale(scenario, model, shadow_db), scenario.n_elements, snr_config(scenario)};
}

}  // namespace irsperf::channel
