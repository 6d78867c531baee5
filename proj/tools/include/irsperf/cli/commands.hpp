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

#include "irsperf/channel/config.hpp"
#include "irsperf/cli/table.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace irsperf::cli {

enum class PolicySelection { Arbitrary, Optimal, Both };

PolicySelection parse_policy(const std::string& text);  // throws ConfigError
std::string to_string(PolicySelection policy);

/// "a,b,c" or "start:step:stop" (inclusive). Must be non-empty and sorted.
std::vector<double> parse_real_grid(const std::string& text, const std::string& flag);
std::vector<std::size_t> parse_count_grid(const std::string& text, const std::string& flag);

struct CoverageParams {
    std::vector<std::size_t> n_grid;  // empty = the scenario's n_elements
    std::vector<double> xi_grid;
    std::size_t trials = 100000;
    PolicySelection policy = PolicySelection::Both;
    std::size_t threads = 0;
};

struct CapacityParams {
    std::vector<std::size_t> n_grid;  // empty = the scenario's n_elements
    std::size_t trials = 1000000;
    PolicySelection policy = PolicySelection::Both;
    std::size_t threads = 0;
};

struct Figure2Params {
    std::vector<std::size_t> n_grid;
    std::size_t trials_per_drop = 1000;
    PolicySelection policy = PolicySelection::Both;
    std::size_t threads = 0;
};

struct ValidateParams {
    std::size_t trials = 1000000;
    std::size_t threads = 0;
};

/// Default rate grid: 0, 0.5, ..., 8 b/s/Hz.
std::vector<double> default_xi_grid();
/// Default surface sizes for the capacity-versus-N experiment.
std::vector<std::size_t> default_figure2_grid();

/// Coverage versus rate with closed forms, simulation and the no-IRS baseline.
/// Shadowing is always off for this experiment.
Table run_figure1(const channel::ExperimentConfig& config, const CoverageParams& params);

/// Average ergodic capacity versus N over random destination drops with
/// log-normal shadowing, plus Jensen bounds and the no-IRS baseline.
Table run_figure2(const channel::ExperimentConfig& config, const Figure2Params& params);

/// Coverage for the scenario as configured (no shadowing draw).
Table run_coverage(const channel::ExperimentConfig& config, const CoverageParams& params);

/// Ergodic capacity for the scenario as configured (no shadowing draw).
Table run_capacity(const channel::ExperimentConfig& config, const CapacityParams& params);

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool passed() const;
    std::string to_text() const;
};

/// Closed forms against their oracles: fit identities, MeijerG against the
/// tail integrals, simulated moments, the product law and exact reductions.
ValidationReport run_validate(const channel::ExperimentConfig& config, const ValidateParams& params);

}  // namespace irsperf::cli
