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

#include "irsperf/channel/scenario.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace irsperf::channel {

/// Random destination placement used by the capacity-versus-N experiment.
struct DropModel {
    std::size_t count = 200;
    double dest_x_min = 50.0;
    double dest_x_max = 200.0;
    double dest_y = 0.0;
};

/// Full contents of a scenario file.
///
///   source: [0, 0]
///   irs: [40, 10]
///   destination: [60, 0]
///   n_elements: 800
///   tx_power_dbm: 10
///   noise_dbm: -94
///   shadowing_std_db: 0
///   seed: 20201005
///   pathloss: { gt_dbi, gr_dbi, exponent_sd, exponent_sr, exponent_rd, offset_db }
///   drops: { count, dest_x: [min, max], dest_y }
///
/// Every key is optional and defaults to the values above. Unknown keys are
/// rejected so that typos do not silently fall back to defaults.
struct ExperimentConfig {
    Scenario scenario;
    PathLossModel path_loss;
    std::uint64_t seed = 20201005;
    DropModel drops;

    void validate() const;
};

/// Throws ConfigError with the offending line and key.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Canonical "key = value" lines describing the resolved configuration.
std::vector<std::string> describe(const ExperimentConfig& config);

}  // namespace irsperf::channel
