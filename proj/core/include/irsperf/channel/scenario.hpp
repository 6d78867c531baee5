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

#pragma once

#include <array>
#include <cstddef>

namespace irsperf::channel {

struct Point2 {
    double x = 0.0;  // meters
    double y = 0.0;  // meters
};

double distance(Point2 a, Point2 b) noexcept;

/// Positions, IRS size and power budget of one experiment drop.
struct Scenario {
    Point2 source_pos{0.0, 0.0};
    Point2 irs_pos{40.0, 10.0};
    Point2 dest_pos{60.0, 0.0};
    std::size_t n_elements = 800;
    double tx_power_dbm = 10.0;
    double noise_dbm = -94.0;
    double shadowing_std_db = 0.0;

    /// Throws DomainError on coincident positions, non-finite powers or
    /// negative shadowing deviation.
    void validate() const;
};

/// Log-distance model: beta[dB] = Gt + Gr - 10 nu log10(d / 1 m) + offset + z.
struct PathLossModel {
    double gt_dbi = 3.2;
    double gr_dbi = 1.3;
    double exponent_sd = 3.76;
    double exponent_sr = 3.76;
    double exponent_rd = 3.76;
    double offset_db = -30.0;

    void validate() const;
};

/// Linear-scale variances of the three Rayleigh links.
struct LargeScaleFading {
    double beta_sd = 1.0;
    double beta_sr = 1.0;
    double beta_rd = 1.0;

    void validate() const;
};

/// Transmit power rho and noise power sigma^2, both in mW.
struct SnrConfig {
    double rho_linear = 1.0;
    double sigma2_linear = 1.0;

    void validate() const;
    double ratio() const noexcept { return rho_linear / sigma2_linear; }
};

/// Shadowing realisation (z_sd, z_sr, z_rd) in dB.
using ShadowDraws = std::array<double, 3>;

double db_to_linear(double db) noexcept;
double linear_to_db(double linear) noexcept;

LargeScaleFading compute_large_scale(const Scenario& scenario, const PathLossModel& model,
                                     const ShadowDraws& shadow_db = {0.0, 0.0, 0.0});

SnrConfig snr_config(const Scenario& scenario);

/// Everything the closed forms and the simulator need about one link.
struct Link {
    LargeScaleFading fading;
    std::size_t n_elements = 0;
    SnrConfig snr;
};

Link make_link(const Scenario& scenario, const PathLossModel& model,
               const ShadowDraws& shadow_db = {0.0, 0.0, 0.0});

}  // namespace irsperf::channel
