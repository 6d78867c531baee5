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

#include "irsperf/cli/commands.hpp"

#include "irsperf/analysis/capacity.hpp"
#include "irsperf/analysis/coverage.hpp"
#include "irsperf/analysis/gamma_fit.hpp"
#include "irsperf/errors.hpp"
#include "irsperf/monte_carlo.hpp"
#include "irsperf/random.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>

#ifndef IRSPERF_VERSION
#define IRSPERF_VERSION "unknown"
#endif

namespace irsperf::cli {

using analysis::CoverageQuery;
using analysis::EvaluationPath;
using channel::ExperimentConfig;
using channel::Link;
using channel::PhasePolicy;

namespace {

using Cell = std::optional<double>;

bool wants(PolicySelection sel, PhasePolicy p)
{
    if (sel == PolicySelection::Both) return true;
    return (sel == PolicySelection::Optimal) == (p == PhasePolicy::Optimal);
}

std::string join(const std::vector<std::string>& parts, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

template <typename T>
std::string grid_text(const std::vector<T>& grid)
{
    std::vector<std::string> parts;
    for (const T& v : grid) parts.push_back(format_number(static_cast<double>(v)));
    return join(parts, ",");
}

std::vector<std::string> preamble(const std::string& command, const ExperimentConfig& config)
{
    std::vector<std::string> lines{std::string("irsperf ") + IRSPERF_VERSION, "command = " + command};
    for (const auto& line : channel::describe(config)) lines.push_back("config " + line);
    return lines;
}

double parse_number(const std::string& token, const std::string& flag)
{
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last || !std::isfinite(value)) {
        throw ConfigError(flag + ": '" + token + "' is not a number", -1, flag);
    }
    return value;
}

// Tracks which route produced the closed-form values of one column.
struct PathTally {
    std::size_t meijer_g = 0;
    std::size_t quadrature = 0;

    void add(EvaluationPath p) { (p == EvaluationPath::MeijerG ? meijer_g : quadrature)++; }

    std::string describe() const
    {
        const std::size_t total = meijer_g + quadrature;
        if (quadrature == 0) return "meijer_g";
        if (meijer_g == 0) return "quadrature";
        return "meijer_g (" + std::to_string(meijer_g) + " of " + std::to_string(total) + "), quadrature (" +
               std::to_string(quadrature) + " of " + std::to_string(total) + ")";
    }
};

monte_carlo::SimConfig sim_config(std::size_t trials, std::uint64_t seed, std::size_t threads, std::uint32_t drop = 0)
{
    monte_carlo::SimConfig sim;
    sim.trials = trials;
    sim.seed = seed;
    sim.threads = threads;
    sim.drop = drop;
    return sim;
}

std::vector<std::size_t> n_grid_or_default(const std::vector<std::size_t>& grid, const ExperimentConfig& config)
{
    return grid.empty() ? std::vector<std::size_t>{config.scenario.n_elements} : grid;
}

void require_sorted(const std::vector<double>& grid, const std::string& flag)
{
    if (grid.empty()) throw ConfigError(flag + ": grid is empty", -1, flag);
    if (!std::is_sorted(grid.begin(), grid.end())) throw ConfigError(flag + ": grid must be sorted", -1, flag);
}

Table coverage_table(const std::string& command, const ExperimentConfig& config, const CoverageParams& params,
                     bool with_baseline)
{
    const auto n_grid = n_grid_or_default(params.n_grid, config);
    std::vector<double> n_as_real(n_grid.begin(), n_grid.end());
    require_sorted(n_as_real, "--n-grid");
    require_sorted(params.xi_grid, "--xi-grid");
    for (double xi : params.xi_grid) {
        if (xi < 0.0) throw ConfigError("--xi-grid: rates must be non-negative", -1, "--xi-grid");
    }

    const Link base = channel::make_link(config.scenario, config.path_loss);
    const bool arb = wants(params.policy, PhasePolicy::Arbitrary);
    const bool opt = wants(params.policy, PhasePolicy::Optimal);

    Table t;
    t.comments = preamble(command, config);
    t.comments.push_back("n_grid = " + grid_text(n_grid));
    t.comments.push_back("xi_grid = " + grid_text(params.xi_grid));
    t.comments.push_back("trials = " + std::to_string(params.trials));
    t.comments.push_back("policy = " + to_string(params.policy));
    t.comments.push_back("shadowing = none (z = 0 dB on every link)");
    t.comments.push_back("fading substreams = (seed " + std::to_string(config.seed) + ", drop 0, trial t)");
    t.comments.push_back("evaluation_path closed_form_arbitrary = incomplete_gamma");
    t.comments.push_back("evaluation_path closed_form_optimal = incomplete_gamma");
    if (with_baseline) t.comments.push_back("evaluation_path siso_baseline = incomplete_gamma (N = 0)");
    t.comments.push_back("monte_carlo_* = fraction of trials with instantaneous capacity >= xi");

    t.columns = {"n", "xi", "closed_form_arbitrary", "closed_form_optimal", "monte_carlo_arbitrary",
                 "monte_carlo_optimal", "mc_std_error_arbitrary", "mc_std_error_optimal"};
    if (with_baseline) t.columns.push_back("siso_baseline");

    const auto siso_fit = analysis::fit_gamma_arbitrary(base.fading, 0);
    const auto sim = sim_config(params.trials, config.seed, params.threads);
    for (std::size_t n : n_grid) {
        const Link link{base.fading, n, base.snr};
        const auto fa = analysis::fit_gamma_arbitrary(link.fading, n);
        const auto fo = analysis::fit_gamma_optimal(link.fading, n);

        std::vector<monte_carlo::EmpiricalEstimate> mc_a, mc_o;
        if (arb && opt) {
            auto both = monte_carlo::simulate_coverage_both(link, params.xi_grid, sim);
            mc_a = std::move(both.arbitrary);
            mc_o = std::move(both.optimal);
        } else if (arb) {
            mc_a = monte_carlo::simulate_coverage(link, PhasePolicy::Arbitrary, params.xi_grid, sim);
        } else {
            mc_o = monte_carlo::simulate_coverage(link, PhasePolicy::Optimal, params.xi_grid, sim);
        }

        for (std::size_t j = 0; j < params.xi_grid.size(); ++j) {
            const CoverageQuery q{params.xi_grid[j], link.snr};
            std::vector<Cell> row(t.columns.size());
            row[0] = static_cast<double>(n);
            row[1] = q.threshold_rate;
            if (arb) {
                row[2] = analysis::coverage_arbitrary(fa, q);
                row[4] = mc_a[j].mean;
                row[6] = mc_a[j].std_error;
            }
            if (opt) {
                row[3] = analysis::coverage_optimal(fo, q);
                row[5] = mc_o[j].mean;
                row[7] = mc_o[j].std_error;
            }
            if (with_baseline) row[8] = analysis::coverage_arbitrary(siso_fit, q);
            t.rows.push_back(std::move(row));
        }
    }
    return t;
}

}  // namespace

PolicySelection parse_policy(const std::string& text)
{
    if (text == "arbitrary") return PolicySelection::Arbitrary;
    if (text == "optimal") return PolicySelection::Optimal;
    if (text == "both") return PolicySelection::Both;
    throw ConfigError("--policy must be arbitrary, optimal or both", -1, "--policy");
}

std::string to_string(PolicySelection policy)
{
    switch (policy) {
    case PolicySelection::Arbitrary: return "arbitrary";
    case PolicySelection::Optimal: return "optimal";
    case PolicySelection::Both: break;
    }
    return "both";
}

std::vector<double> parse_real_grid(const std::string& text, const std::string& flag)
{
    std::vector<double> grid;
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream in(text);
        for (std::string tok; std::getline(in, tok, ':');) parts.push_back(tok);
        if (parts.size() != 3) throw ConfigError(flag + ": range must be start:step:stop", -1, flag);
        const double start = parse_number(parts[0], flag);
        const double step = parse_number(parts[1], flag);
        const double stop = parse_number(parts[2], flag);
        if (!(step > 0.0) || stop < start) throw ConfigError(flag + ": empty or backwards range", -1, flag);
        const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
        if (count > 1000000) throw ConfigError(flag + ": range has too many points", -1, flag);
        for (std::size_t i = 0; i < count; ++i) grid.push_back(start + static_cast<double>(i) * step);
    } else {
        std::stringstream in(text);
        for (std::string tok; std::getline(in, tok, ',');) grid.push_back(parse_number(tok, flag));
    }
    require_sorted(grid, flag);
    return grid;
}

std::vector<std::size_t> parse_count_grid(const std::string& text, const std::string& flag)
{
    std::vector<std::size_t> out;
    for (double v : parse_real_grid(text, flag)) {
        if (v < 0.0 || v != std::floor(v) || v > 1e9) {
            throw ConfigError(flag + ": entries must be non-negative integers", -1, flag);
        }
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

std::vector<double> default_xi_grid()
{
    std::vector<double> grid;
    for (int i = 0; i <= 16; ++i) grid.push_back(0.5 * i);
    return grid;
}

std::vector<std::size_t> default_figure2_grid()
{
    return {0, 16, 64, 256, 800};
}

Table run_figure1(const ExperimentConfig& config, const CoverageParams& params)
{
    ExperimentConfig flat = config;
    flat.scenario.shadowing_std_db = 0.0;
    return coverage_table("figure1", flat, params, true);
}

Table run_coverage(const ExperimentConfig& config, const CoverageParams& params)
{
    return coverage_table("coverage", config, params, false);
}

Table run_capacity(const ExperimentConfig& config, const CapacityParams& params)
{
    const auto n_grid = n_grid_or_default(params.n_grid, config);
    require_sorted(std::vector<double>(n_grid.begin(), n_grid.end()), "--n-grid");
    const Link base = channel::make_link(config.scenario, config.path_loss);
    const bool arb = wants(params.policy, PhasePolicy::Arbitrary);
    const bool opt = wants(params.policy, PhasePolicy::Optimal);

    Table t;
    t.columns = {"n",
                 "closed_form_arbitrary",
                 "closed_form_optimal",
                 "monte_carlo_arbitrary",
                 "monte_carlo_optimal",
                 "mc_std_error_arbitrary",
                 "mc_std_error_optimal",
                 "upper_bound_arbitrary",
                 "upper_bound_optimal",
                 "siso_baseline"};

    PathTally path_a, path_o;
    const double siso = analysis::ergodic_capacity_quadrature(
        PhasePolicy::Arbitrary, analysis::fit_gamma_arbitrary(base.fading, 0), base.snr);
    const auto sim = sim_config(params.trials, config.seed, params.threads);
    for (std::size_t n : n_grid) {
        const Link link{base.fading, n, base.snr};
        std::vector<Cell> row(t.columns.size());
        row[0] = static_cast<double>(n);
        std::optional<monte_carlo::EmpiricalEstimate> mc_a, mc_o;
        if (arb && opt) {
            const auto both = monte_carlo::simulate_capacity_both(link, sim);
            mc_a = both.arbitrary;
            mc_o = both.optimal;
        } else if (arb) {
            mc_a = monte_carlo::simulate_capacity(link, PhasePolicy::Arbitrary, sim);
        } else {
            mc_o = monte_carlo::simulate_capacity(link, PhasePolicy::Optimal, sim);
        }
        if (arb) {
            const auto e = analysis::ergodic_capacity(PhasePolicy::Arbitrary,
                                                      analysis::fit_gamma_arbitrary(link.fading, n), link.snr);
            path_a.add(e.path);
            row[1] = e.value;
            row[3] = mc_a->mean;
            row[5] = mc_a->std_error;
            row[7] = analysis::capacity_upper_bound(PhasePolicy::Arbitrary, link.fading, n, link.snr);
        }
        if (opt) {
            const auto e = analysis::ergodic_capacity(PhasePolicy::Optimal,
                                                      analysis::fit_gamma_optimal(link.fading, n), link.snr);
            path_o.add(e.path);
            row[2] = e.value;
            row[4] = mc_o->mean;
            row[6] = mc_o->std_error;
            row[8] = analysis::capacity_upper_bound(PhasePolicy::Optimal, link.fading, n, link.snr);
        }
        row[9] = siso;
        t.rows.push_back(std::move(row));
    }

    t.comments = preamble("capacity", config);
    t.comments.push_back("n_grid = " + grid_text(n_grid));
    t.comments.push_back("trials = " + std::to_string(params.trials));
    t.comments.push_back("policy = " + to_string(params.policy));
    t.comments.push_back("shadowing = none (z = 0 dB on every link)");
    t.comments.push_back("fading substreams = (seed " + std::to_string(config.seed) + ", drop 0, trial t)");
    if (arb) t.comments.push_back("evaluation_path closed_form_arbitrary = " + path_a.describe());
    if (opt) t.comments.push_back("evaluation_path closed_form_optimal = " + path_o.describe());
    t.comments.push_back("evaluation_path siso_baseline = quadrature (N = 0)");
    t.comments.push_back("upper_bound_* = Jensen bound log2(1 + rho/sigma^2 E{gain})");
    return t;
}

Table run_figure2(const ExperimentConfig& config, const Figure2Params& params)
{
    const auto n_grid = params.n_grid.empty() ? default_figure2_grid() : params.n_grid;
    require_sorted(std::vector<double>(n_grid.begin(), n_grid.end()), "--n-grid");
    const bool arb = wants(params.policy, PhasePolicy::Arbitrary);
    const bool opt = wants(params.policy, PhasePolicy::Optimal);
    const std::size_t drops = config.drops.count;
    const std::size_t m = n_grid.size();

    struct Sums {
        double closed_a = 0, closed_o = 0, mc_a = 0, mc_o = 0, se2_a = 0, se2_o = 0, bound_a = 0, bound_o = 0,
               siso = 0;
    };
    std::vector<Sums> sums(m);
    PathTally path_a, path_o;
    std::vector<std::string> drop_lines;

    for (std::size_t d = 0; d < drops; ++d) {
        const auto drop_id = static_cast<std::uint32_t>(d);
        RandomStream rng(config.seed, {StreamPurpose::Drop, drop_id, 0});
        const double x = config.drops.dest_x_min + (config.drops.dest_x_max - config.drops.dest_x_min) * rng.uniform();
        const auto [g0, g1] = rng.normal_pair();
        const auto [g2, unused] = rng.normal_pair();
        (void)unused;
        const double sd = config.scenario.shadowing_std_db;
        const channel::ShadowDraws shadow{sd * g0, sd * g1, sd * g2};

        channel::Scenario s = config.scenario;
        s.dest_pos = {x, config.drops.dest_y};
        const Link base = channel::make_link(s, config.path_loss, shadow);
        drop_lines.push_back("drop " + std::to_string(d) + ": destination = [" + format_number(x) + ", " +
                             format_number(config.drops.dest_y) + "], shadow_db = [" + format_number(shadow[0]) +
                             ", " + format_number(shadow[1]) + ", " + format_number(shadow[2]) +
                             "], substreams = (seed " + std::to_string(config.seed) + ", drop " +
                             std::to_string(d) + ")");

        const double siso = analysis::ergodic_capacity_quadrature(
            PhasePolicy::Arbitrary, analysis::fit_gamma_arbitrary(base.fading, 0), base.snr);
        const auto sim = sim_config(params.trials_per_drop, config.seed, params.threads, drop_id);
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t n = n_grid[i];
            const Link link{base.fading, n, base.snr};
            Sums& acc = sums[i];
            acc.siso += siso;
            std::optional<monte_carlo::EmpiricalEstimate> mc_a, mc_o;
            if (arb && opt) {
                const auto both = monte_carlo::simulate_capacity_both(link, sim);
                mc_a = both.arbitrary;
                mc_o = both.optimal;
            } else if (arb) {
                mc_a = monte_carlo::simulate_capacity(link, PhasePolicy::Arbitrary, sim);
            } else {
                mc_o = monte_carlo::simulate_capacity(link, PhasePolicy::Optimal, sim);
            }
            if (arb) {
                const auto e = analysis::ergodic_capacity(PhasePolicy::Arbitrary,
                                                          analysis::fit_gamma_arbitrary(link.fading, n), link.snr);
                path_a.add(e.path);
                acc.closed_a += e.value;
                acc.mc_a += mc_a->mean;
                acc.se2_a += mc_a->std_error * mc_a->std_error;
                acc.bound_a += analysis::capacity_upper_bound(PhasePolicy::Arbitrary, link.fading, n, link.snr);
            }
            if (opt) {
                const auto e = analysis::ergodic_capacity(PhasePolicy::Optimal,
                                                          analysis::fit_gamma_optimal(link.fading, n), link.snr);
                path_o.add(e.path);
                acc.closed_o += e.value;
                acc.mc_o += mc_o->mean;
                acc.se2_o += mc_o->std_error * mc_o->std_error;
                acc.bound_o += analysis::capacity_upper_bound(PhasePolicy::Optimal, link.fading, n, link.snr);
            }
        }
    }

    Table t;
    t.columns = {"n",
                 "closed_form_arbitrary",
                 "closed_form_optimal",
                 "monte_carlo_arbitrary",
                 "monte_carlo_optimal",
                 "mc_std_error_arbitrary",
                 "mc_std_error_optimal",
                 "upper_bound_arbitrary",
                 "upper_bound_optimal",
                 "siso_baseline"};
    const double nd = static_cast<double>(drops);
    for (std::size_t i = 0; i < m; ++i) {
        const Sums& s = sums[i];
        std::vector<Cell> row(t.columns.size());
        row[0] = static_cast<double>(n_grid[i]);
        if (arb) {
            row[1] = s.closed_a / nd;
            row[3] = s.mc_a / nd;
            row[5] = std::sqrt(s.se2_a) / nd;
            row[7] = s.bound_a / nd;
        }
        if (opt) {
            row[2] = s.closed_o / nd;
            row[4] = s.mc_o / nd;
            row[6] = std::sqrt(s.se2_o) / nd;
            row[8] = s.bound_o / nd;
        }
        row[9] = s.siso / nd;
        t.rows.push_back(std::move(row));
    }

    t.comments = preamble("figure2", config);
    t.comments.push_back("n_grid = " + grid_text(n_grid));
    t.comments.push_back("trials_per_drop = " + std::to_string(params.trials_per_drop));
    t.comments.push_back("policy = " + to_string(params.policy));
    t.comments.push_back("every column is an average over " + std::to_string(drops) + " destination drops");
    if (arb) t.comments.push_back("evaluation_path closed_form_arbitrary = " + path_a.describe());
    if (opt) t.comments.push_back("evaluation_path closed_form_optimal = " + path_o.describe());
    t.comments.push_back("evaluation_path siso_baseline = quadrature (N = 0)");
    t.comments.push_back("mc_std_error_* = sqrt(sum of per-drop squared standard errors) / drops");
    t.comments.push_back("upper_bound_* = Jensen bound log2(1 + rho/sigma^2 E{gain}), averaged over drops");
    t.comments.push_back("drop substream = (seed, Drop purpose, drop d): uniform x then three shadowing normals");
    t.comments.insert(t.comments.end(), drop_lines.begin(), drop_lines.end());
    return t;
}

}  // namespace irsperf::cli
