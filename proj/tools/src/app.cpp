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

#include "irsperf/cli/app.hpp"

#include "irsperf/cli/commands.hpp"
#include "irsperf/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace irsperf::cli {

namespace {

class OutputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string scenario;
    std::string out = "-";
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<std::size_t> drops;
    std::string n_grid;
    std::string xi_grid;
    std::string policy = "both";
    std::size_t threads = 0;
};

void add_common(CLI::App* cmd, Options& o)
{
    cmd->add_option("--scenario", o.scenario, "Scenario file (YAML)")->check(CLI::ExistingFile);
    cmd->add_option("--out", o.out, "Output file, '-' for standard output");
    cmd->add_option("--seed", o.seed, "Random seed (overrides the scenario file)");
    cmd->add_option("--trials", o.trials, "Monte-Carlo trials (per drop for figure2)")->check(CLI::PositiveNumber);
    cmd->add_option("--threads", o.threads, "Worker threads, 0 = all cores");
}

void add_policy(CLI::App* cmd, Options& o)
{
    cmd->add_option("--policy", o.policy, "Phase policy: arbitrary, optimal or both")
        ->check(CLI::IsMember({"arbitrary", "optimal", "both"}));
}

channel::ExperimentConfig resolve_config(const Options& o, bool shadowed_default)
{
    channel::ExperimentConfig cfg;
    if (!o.scenario.empty()) {
        cfg = channel::load_config(o.scenario);
    } else if (shadowed_default) {
        cfg.scenario.shadowing_std_db = 4.0;
    }
    if (o.seed) cfg.seed = *o.seed;
    if (o.drops) cfg.drops.count = *o.drops;
    cfg.validate();
    return cfg;
}

void write_output(const Options& o, const std::string& text, std::ostream& out)
{
    if (o.out == "-") {
        out << text;
        out.flush();
        return;
    }
    std::ofstream file(o.out, std::ios::binary | std::ios::trunc);
    if (!file) throw OutputError("cannot open '" + o.out + "' for writing");
    file << text;
    file.close();
    if (!file) throw OutputError("failed writing '" + o.out + "'");
}

}  // namespace

int run_app(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Coverage and ergodic capacity of IRS-assisted links: closed forms and Monte-Carlo"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("irsperf ") + IRSPERF_VERSION);

    Options o;
    auto* fig1 = app.add_subcommand("figure1", "Coverage versus rate threshold, shadowing off");
    auto* fig2 = app.add_subcommand("figure2", "Average ergodic capacity versus IRS size over random drops");
    auto* cov = app.add_subcommand("coverage", "Coverage for one scenario");
    auto* cap = app.add_subcommand("capacity", "Ergodic capacity for one scenario");
    auto* val = app.add_subcommand("validate", "Check every closed form against its oracle");
    for (auto* cmd : {fig1, fig2, cov, cap, val}) add_common(cmd, o);
    for (auto* cmd : {fig1, fig2, cov, cap}) {
        add_policy(cmd, o);
        cmd->add_option("--n-grid", o.n_grid, "IRS sizes, 'a,b,c' or 'start:step:stop'");
    }
    for (auto* cmd : {fig1, cov}) cmd->add_option("--xi-grid", o.xi_grid, "Rate thresholds [b/s/Hz]");
    fig2->add_option("--drops", o.drops, "Number of random destination drops")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kConfigurationError;
    }

    try {
        const auto policy = parse_policy(o.policy);
        const auto n_grid = o.n_grid.empty() ? std::vector<std::size_t>{} : parse_count_grid(o.n_grid, "--n-grid");
        const auto xi_grid = o.xi_grid.empty() ? default_xi_grid() : parse_real_grid(o.xi_grid, "--xi-grid");

        if (fig1->parsed() || cov->parsed()) {
            const CoverageParams p{n_grid, xi_grid, o.trials.value_or(100000), policy, o.threads};
            const auto cfg = resolve_config(o, false);
            write_output(o, (fig1->parsed() ? run_figure1(cfg, p) : run_coverage(cfg, p)).to_csv(), out);
        } else if (fig2->parsed()) {
            const Figure2Params p{n_grid, o.trials.value_or(1000), policy, o.threads};
            write_output(o, run_figure2(resolve_config(o, true), p).to_csv(), out);
        } else if (cap->parsed()) {
            const CapacityParams p{n_grid, o.trials.value_or(1000000), policy, o.threads};
            write_output(o, run_capacity(resolve_config(o, false), p).to_csv(), out);
        } else {
            const ValidateParams p{o.trials.value_or(1000000), o.threads};
            const auto report = run_validate(resolve_config(o, false), p);
            write_output(o, report.to_text(), out);
            if (!report.passed()) {
                err << "validation failed\n";
                return kValidationFailure;
            }
        }
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << '\n';
        return kConfigurationError;
    } catch (const DomainError& e) {
        err << "invalid input: " << e.what() << '\n';
        return kConfigurationError;
    } catch (const NumericConvergenceError& e) {
        err << "numeric convergence failure: " << e.what() << " (achieved error " << e.achieved_error() << ")\n";
        return kConvergenceFailure;
    } catch (const OutputError& e) {
        err << "output error: " << e.what() << '\n';
        return kConfigurationError;
    }
    return kSuccess;
}

}  // namespace irsperf::cli
