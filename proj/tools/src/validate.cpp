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
#include "irsperf/analysis/coverage.hpp"
#include "irsperf/analysis/gamma_fit.hpp"
#include "irsperf/analysis/moments.hpp"
#include "irsperf/cli/commands.hpp"
#include "irsperf/monte_carlo.hpp"
#include "irsperf/random.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace irsperf::cli {

using channel::LargeScaleFading;
using channel::Link;
using channel::PhasePolicy;

namespace {

double rel(double a, double b)
{
    return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

CheckResult at_most(std::string name, double measured, double tolerance)
{
    return {std::move(name), measured, tolerance, measured <= tolerance};
}

// Largest |empirical - closed| / standard error over the five moments.
double moment_z(const monte_carlo::MomentsOfXAndC& m, const analysis::MomentSummary& x,
                const analysis::MomentSummary& c)
{
    auto z = [](const monte_carlo::EmpiricalEstimate& e, double expected) {
        return std::abs(e.mean - expected) / e.std_error;
    };
    return std::max({z(m.x.mean, x.mean), z(m.x.second_moment, x.second_moment), z(m.x.variance, x.variance),
                     z(m.c.mean, c.mean), z(m.c.variance, c.variance)});
}

}  // namespace

bool ValidationReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string ValidationReport::to_text() const
{
    std::ostringstream out;
    std::size_t failures = 0;
    for (const auto& c : checks) {
        out << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  measured=" << format_number(c.measured)
            << "  tolerance=" << format_number(c.tolerance) << '\n';
        failures += c.passed ? 0 : 1;
    }
    out << (failures ? "validation failed: " : "validation passed: ") << (checks.size() - failures) << " of "
        << checks.size() << " checks passed\n";
    return out.str();
}

ValidationReport run_validate(const channel::ExperimentConfig& config, const ValidateParams& params)
{
    ValidationReport report;
    const Link link = channel::make_link(config.scenario, config.path_loss);
    const LargeScaleFading unit{1.0, 1.0, 1.0};
    const std::size_t n_grid[] = {0, 1, 4, 16, 64, 256, 800};

    // Moment-matching identities.
    double fit_a = 0.0, fit_o = 0.0;
    for (const auto& f : {unit, link.fading}) {
        for (std::size_t n : n_grid) {
            const auto ma = analysis::moments_arbitrary(f, n);
            const auto ga = analysis::fit_gamma_arbitrary(f, n);
            fit_a = std::max({fit_a, rel(ga.shape * ga.scale, ma.mean),
                              rel(ga.shape * ga.scale * ga.scale, ma.variance)});
            const auto mo = analysis::moments_optimal(f, n);
            const auto go = analysis::fit_gamma_optimal(f, n);
            fit_o = std::max({fit_o, rel(go.shape * go.scale, mo.mean),
                              rel(go.shape * go.scale * go.scale, mo.variance)});
        }
    }
    report.checks.push_back(at_most("gamma fit of X reproduces mean and variance (rel)", fit_a, 1e-12));
    report.checks.push_back(at_most("gamma fit of C reproduces mean and variance (rel)", fit_o, 1e-12));

    // MeijerG forms against the tail integrals, 25 (shape, SNR) pairs per policy.
    double mg_a = 0.0, mg_o = 0.0;
    for (double shape : {0.5, 1.5, 5.0, 15.0, 50.0}) {
        for (double ratio : {0.01, 1.0, 100.0, 1e4, 1e6}) {
            const channel::SnrConfig snr{ratio, 1.0};
            const analysis::GammaFit fa{shape, 1.0, analysis::GammaTarget::PowerX};
            const analysis::GammaFit fo{shape, 1.0, analysis::GammaTarget::AmplitudeC};
            mg_a = std::max(mg_a, rel(analysis::ergodic_capacity_closed(PhasePolicy::Arbitrary, fa, snr),
                                      analysis::ergodic_capacity_quadrature(PhasePolicy::Arbitrary, fa, snr)));
            mg_o = std::max(mg_o, rel(analysis::ergodic_capacity_closed(PhasePolicy::Optimal, fo, snr),
                                      analysis::ergodic_capacity_quadrature(PhasePolicy::Optimal, fo, snr)));
        }
    }
    report.checks.push_back(at_most("MeijerG capacity matches tail integral, arbitrary (rel)", mg_a, 1e-6));
    report.checks.push_back(at_most("MeijerG capacity matches tail integral, optimal (rel)", mg_o, 1e-6));

    // Simulated moments of X and C.
    monte_carlo::SimConfig sim;
    sim.trials = params.trials;
    sim.seed = config.seed;
    sim.threads = params.threads;
    for (const auto& [label, fading, n] : {std::tuple{"unit betas, N = 4", unit, std::size_t{4}},
                                           std::tuple{"scenario betas, N = 16", link.fading, std::size_t{16}}}) {
        const Link l{fading, n, link.snr};
        const auto m = monte_carlo::empirical_moments_both(l, PhasePolicy::Arbitrary, sim);
        const double z = moment_z(m, analysis::moments_arbitrary(fading, n), analysis::moments_optimal(fading, n));
        report.checks.push_back(
            at_most(std::string("simulated moments of X and C, ") + label + " (max |z|)", z, 3.0));
    }

    // Product law: sup |F_n - F| inside the DKW band at confidence 0.999.
    {
        const std::size_t count = params.trials;
        auto b = monte_carlo::sample_product_magnitudes(link.fading, count, sim);
        std::sort(b.begin(), b.end());
        double d = 0.0;
        const double nn = static_cast<double>(count);
        for (std::size_t i = 0; i < count; ++i) {
            const double cdf = analysis::product_cdf(link.fading, b[i]);
            d = std::max({d, std::abs(cdf - static_cast<double>(i) / nn), std::abs(static_cast<double>(i + 1) / nn - cdf)});
        }
        const double band = std::sqrt(std::log(2.0 / 0.001) / (2.0 * nn));
        report.checks.push_back(at_most("product amplitude CDF inside DKW band (sup deviation)", d, band));
    }

    // Optimal phases in the effective channel equal the magnitude form.
    {
        double worst = 0.0;
        channel::ChannelRealization real;
        for (std::uint32_t t = 0; t < 10000; ++t) {
            RandomStream rng(config.seed, {StreamPurpose::Generic, 0, t});
            channel::sample_channels(link.fading, 64, rng, real);
            channel::apply_phase_policy(PhasePolicy::Optimal, real, rng);
            worst = std::max(worst, rel(channel::instantaneous_capacity(real, link.snr),
                                        channel::optimal_capacity(real, link.snr)));
        }
        report.checks.push_back(at_most("optimal phases: effective-channel capacity equals magnitude form (rel)",
                                        worst, 1e-10));
    }

    // No IRS: coverage is exp(-z / beta_sd).
    {
        const auto f0 = analysis::fit_gamma_arbitrary(link.fading, 0);
        double worst = 0.0;
        for (double xi : default_xi_grid()) {
            const analysis::CoverageQuery q{xi, link.snr};
            worst = std::max(worst, std::abs(analysis::coverage_arbitrary(f0, q) -
                                             std::exp(-q.gain_threshold() / link.fading.beta_sd)));
        }
        report.checks.push_back(at_most("N = 0 coverage equals the exponential law (abs)", worst, 1e-12));
    }

    // Jensen bounds above the closed-form capacity.
    {
        double excess = -1e300;
        for (std::size_t n : n_grid) {
            for (double ratio : {link.snr.ratio(), 1.0, 1e3}) {
                const channel::SnrConfig snr{ratio, 1.0};
                const double ca = analysis::ergodic_capacity(
                    PhasePolicy::Arbitrary, analysis::fit_gamma_arbitrary(link.fading, n), snr).value;
                const double co = analysis::ergodic_capacity(
                    PhasePolicy::Optimal, analysis::fit_gamma_optimal(link.fading, n), snr).value;
                excess = std::max({excess,
                                   ca - analysis::capacity_upper_bound(PhasePolicy::Arbitrary, link.fading, n, snr),
                                   co - analysis::capacity_upper_bound(PhasePolicy::Optimal, link.fading, n, snr)});
            }
        }
        report.checks.push_back(at_most("closed-form capacity minus Jensen bound (max)", excess, 0.0));
    }
    return report;
}

}  // namespace irsperf::cli
