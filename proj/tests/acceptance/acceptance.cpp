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

// Acceptance checks. Prints exactly one PASS/FAIL line per criterion.
//
//   irsperf_acceptance [criterion ...]    (default: all, 1 through 9)
//
// Exit status is 0 only if every requested criterion passed.

#include "irsperf/analysis/capacity.hpp"
#include "irsperf/analysis/coverage.hpp"
#include "irsperf/analysis/gamma_fit.hpp"
#include "irsperf/analysis/moments.hpp"
#include "irsperf/cli/app.hpp"
#include "irsperf/cli/commands.hpp"
#include "irsperf/monte_carlo.hpp"
#include "irsperf/special/quadrature.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace irsperf;
using analysis::CoverageQuery;
using channel::LargeScaleFading;
using channel::Link;
using channel::PhasePolicy;

namespace {

// Tolerances, fixed here and nowhere else.
constexpr double kCoverageAbsTol = 0.015;
constexpr double kCapacityRelTol = 0.02;
constexpr double kMeijerRelTol = 1e-6;
constexpr double kMomentSigmas = 3.0;
constexpr double kDkwConfidence = 0.999;
constexpr double kPdfMomentRelTol = 1e-6;
constexpr double kSisoCoverageAbsTol = 1e-12;
constexpr double kCoherentRelTol = 1e-10;
constexpr double kSlopeTarget = 2.0;
constexpr double kSlopeTol = 0.05;
constexpr double kRatioTarget = 2.7;
constexpr double kRatioTol = 0.3;
constexpr double kSisoSigmas = 3.0;

constexpr std::uint64_t kSeed = 20201005;

struct Verdict {
    bool pass = true;
    std::vector<std::string> notes;

    void check(bool ok, const std::string& note)
    {
        pass = pass && ok;
        notes.push_back(std::string(ok ? "" : "!") + note);
    }
};

std::string num(double v, int digits = 4)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

double rel(double a, double b)
{
    return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

monte_carlo::SimConfig sim_of(std::size_t trials, std::uint64_t seed = kSeed)
{
    monte_carlo::SimConfig sim;
    sim.trials = trials;
    sim.seed = seed;
    return sim;
}

// The coverage geometry: source (0,0), IRS (40,10), destination (60,0), no shadowing.
Link coverage_link(std::size_t n)
{
    channel::Scenario s;
    s.n_elements = n;
    return channel::make_link(s, channel::PathLossModel{});
}

Verdict criterion_1()
{
    Verdict v;
    const Link link = coverage_link(800);
    std::vector<double> xi;
    for (int i = 1; i <= 16; ++i) xi.push_back(0.5 * i);
    const auto mc = monte_carlo::simulate_coverage_both(link, xi, sim_of(100000));
    const auto fa = analysis::fit_gamma_arbitrary(link.fading, 800);
    const auto fo = analysis::fit_gamma_optimal(link.fading, 800);
    double worst_a = 0.0, worst_o = 0.0, at_a = 0.0, at_o = 0.0;
    for (std::size_t j = 0; j < xi.size(); ++j) {
        const CoverageQuery q{xi[j], link.snr};
        const double da = std::abs(analysis::coverage_arbitrary(fa, q) - mc.arbitrary[j].mean);
        const double d_o = std::abs(analysis::coverage_optimal(fo, q) - mc.optimal[j].mean);
        if (da > worst_a) worst_a = da, at_a = xi[j];
        if (d_o > worst_o) worst_o = d_o, at_o = xi[j];
    }
    v.check(worst_a <= kCoverageAbsTol, "arbitrary max|closed-MC| " + num(worst_a) + " at xi=" + num(at_a) +
                                            " (tol " + num(kCoverageAbsTol) + ")");
    v.check(worst_o <= kCoverageAbsTol,
            "optimal max|closed-MC| " + num(worst_o) + " at xi=" + num(at_o) + " (tol " + num(kCoverageAbsTol) + ")");
    return v;
}

Verdict criterion_2()
{
    Verdict v;
    for (std::size_t n : {4u, 64u, 256u}) {
        const Link link = coverage_link(n);
        const auto mc = monte_carlo::simulate_capacity_both(link, sim_of(1000000));
        const double ca =
            analysis::ergodic_capacity(PhasePolicy::Arbitrary, analysis::fit_gamma_arbitrary(link.fading, n), link.snr)
                .value;
        const double co =
            analysis::ergodic_capacity(PhasePolicy::Optimal, analysis::fit_gamma_optimal(link.fading, n), link.snr)
                .value;
        const double ea = std::abs(ca - mc.arbitrary.mean) / mc.arbitrary.mean;
        const double eo = std::abs(co - mc.optimal.mean) / mc.optimal.mean;
        v.check(ea <= kCapacityRelTol && eo <= kCapacityRelTol,
                "N=" + std::to_string(n) + " rel err arbitrary " + num(ea) + ", optimal " + num(eo));
    }
    v.notes.push_back("tol " + num(kCapacityRelTol));
    return v;
}

Verdict criterion_3()
{
    Verdict v;
    // 10 shapes log-spaced over [0.5, 50] times 5 SNRs: 50 pairs per policy.
    double worst_a = 0.0, worst_o = 0.0;
    int pairs = 0;
    for (int i = 0; i < 10; ++i) {
        const double shape = 0.5 * std::pow(100.0, i / 9.0);
        for (double ratio : {0.01, 1.0, 100.0, 1e4, 1e6}) {
            const channel::SnrConfig snr{ratio, 1.0};
            const analysis::GammaFit fa{shape, 1.0, analysis::GammaTarget::PowerX};
            const analysis::GammaFit fo{shape, 1.0, analysis::GammaTarget::AmplitudeC};
            worst_a = std::max(worst_a, rel(analysis::ergodic_capacity_closed(PhasePolicy::Arbitrary, fa, snr),
                                            analysis::ergodic_capacity_quadrature(PhasePolicy::Arbitrary, fa, snr)));
            worst_o = std::max(worst_o, rel(analysis::ergodic_capacity_closed(PhasePolicy::Optimal, fo, snr),
                                            analysis::ergodic_capacity_quadrature(PhasePolicy::Optimal, fo, snr)));
            ++pairs;
        }
    }
    v.check(worst_a <= kMeijerRelTol, "arbitrary max rel " + num(worst_a) + " over " + std::to_string(pairs) + " pairs");
    v.check(worst_o <= kMeijerRelTol, "optimal max rel " + num(worst_o) + " over " + std::to_string(pairs) + " pairs");
    v.notes.push_back("tol " + num(kMeijerRelTol));
    return v;
}

Verdict criterion_4()
{
    Verdict v;
    struct Case {
        std::string label;
        LargeScaleFading fading;
        std::size_t n;
    };
    const std::vector<Case> cases{{"unit N=1", {1, 1, 1}, 1},
                                  {"unit N=4", {1, 1, 1}, 4},
                                  {"unit N=16", {1, 1, 1}, 16},
                                  {"path-loss N=16", coverage_link(16).fading, 16}};
    std::uint64_t seed = kSeed;
    for (const auto& c : cases) {
        const Link link{c.fading, c.n, {1.0, 1.0}};
        const auto m = monte_carlo::empirical_moments_both(link, PhasePolicy::Arbitrary, sim_of(10000000, seed++));
        const auto x = analysis::moments_arbitrary(c.fading, c.n);
        const auto cc = analysis::moments_optimal(c.fading, c.n);
        auto z = [](const monte_carlo::EmpiricalEstimate& e, double expected) {
            return std::abs(e.mean - expected) / e.std_error;
        };
        const double zs[] = {z(m.x.mean, x.mean),         z(m.x.second_moment, x.second_moment),
                             z(m.x.variance, x.variance), z(m.c.mean, cc.mean),
                             z(m.c.second_moment, cc.second_moment), z(m.c.variance, cc.variance)};
        const double worst = *std::max_element(std::begin(zs), std::end(zs));
        v.check(worst <= kMomentSigmas, c.label + " max|z| " + num(worst, 3) + " (E{X^2} z=" + num(zs[1], 3) + ")");
    }
    v.notes.push_back("tol " + num(kMomentSigmas) + " SE, 1e7 trials");
    return v;
}

Verdict criterion_5()
{
    Verdict v;
    const LargeScaleFading f = coverage_link(1).fading;
    const std::size_t n = 10000000;
    auto b = monte_carlo::sample_product_magnitudes(f, n, sim_of(n));
    std::sort(b.begin(), b.end());
    double d = 0.0;
    const double nn = static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double cdf = analysis::product_cdf(f, b[i]);
        d = std::max({d, std::abs(cdf - static_cast<double>(i) / nn), std::abs(static_cast<double>(i + 1) / nn - cdf)});
    }
    const double band = std::sqrt(std::log(2.0 / (1.0 - kDkwConfidence)) / (2.0 * nn));
    v.check(d <= band, "sup|F_n-F| " + num(d) + " (DKW band " + num(band) + ")");

    // Moments of the PDF by quadrature against E{B} and Var{B}. Integrate in
    // the scaled variable u = z / sqrt(b_sr b_rd) so the integrand is O(1).
    const double g = std::sqrt(f.beta_sr * f.beta_rd);
    special::QuadratureSpec spec;
    spec.rel_tol = 1e-12;
    spec.abs_tol = 0.0;
    auto moment = [&](int k) {
        return special::integrate_semi_infinite(
                   [&](double u) { return std::pow(u, k) * g * analysis::product_pdf(f, u * g); }, spec)
                   .value *
               std::pow(g, k);
    };
    const double mean = moment(1);
    const double var = moment(2) - mean * mean;
    const auto c = analysis::product_constants(f);
    const double e_mean = rel(mean, c.k_prod * c.w_prod);
    const double e_var = rel(var, c.k_prod * c.w_prod * c.w_prod);
    v.check(e_mean <= kPdfMomentRelTol && e_var <= kPdfMomentRelTol,
            "pdf quadrature mean rel " + num(e_mean) + ", variance rel " + num(e_var) + " (tol " +
                num(kPdfMomentRelTol) + ")");
    return v;
}

Verdict criterion_6()
{
    Verdict v;
    double worst = 0.0;
    for (const auto& f : {coverage_link(0).fading, LargeScaleFading{1.0, 1.0, 1.0}, LargeScaleFading{3e-7, 1, 1}}) {
        const auto fit = analysis::fit_gamma_arbitrary(f, 0);
        for (double ratio : {1.0, 1e9, 1e10}) {
            for (double xi = 0.0; xi <= 12.0; xi += 0.25) {
                const CoverageQuery q{xi, {ratio, 1.0}};
                worst = std::max(worst,
                                 std::abs(analysis::coverage_arbitrary(fit, q) - std::exp(-q.gain_threshold() / f.beta_sd)));
            }
        }
    }
    v.check(worst <= kSisoCoverageAbsTol, "N=0 coverage vs exp(-z/b_sd) max abs " + num(worst) + " (tol " +
                                              num(kSisoCoverageAbsTol) + ")");

    const Link link = coverage_link(800);
    double worst_rel = 0.0;
    channel::ChannelRealization real;
    for (std::uint32_t t = 0; t < 10000; ++t) {
        RandomStream rng(kSeed, {StreamPurpose::Generic, 6, t});
        const std::size_t n = 1 + t % 800;
        channel::sample_channels(link.fading, n, rng, real);
        channel::apply_phase_policy(PhasePolicy::Optimal, real, rng);
        worst_rel = std::max(worst_rel, rel(channel::instantaneous_capacity(real, link.snr),
                                            channel::optimal_capacity(real, link.snr)));
    }
    v.check(worst_rel <= kCoherentRelTol, "optimal-phase effective channel vs magnitude form max rel " +
                                              num(worst_rel) + " over 1e4 draws (tol " + num(kCoherentRelTol) + ")");
    return v;
}

Verdict criterion_7()
{
    Verdict v;
    // Dominance over closed-form and simulated capacity.
    double excess = -1e300;
    int configs = 0;
    auto consider = [&](const Link& link) {
        const auto mc = monte_carlo::simulate_capacity_both(link, sim_of(100000));
        const std::size_t n = link.n_elements;
        const double ba = analysis::capacity_upper_bound(PhasePolicy::Arbitrary, link.fading, n, link.snr);
        const double bo = analysis::capacity_upper_bound(PhasePolicy::Optimal, link.fading, n, link.snr);
        const double ca =
            analysis::ergodic_capacity(PhasePolicy::Arbitrary, analysis::fit_gamma_arbitrary(link.fading, n), link.snr)
                .value;
        const double co =
            analysis::ergodic_capacity(PhasePolicy::Optimal, analysis::fit_gamma_optimal(link.fading, n), link.snr).value;
        excess = std::max({excess, ca - ba, co - bo, mc.arbitrary.mean - ba, mc.optimal.mean - bo});
        ++configs;
    };
    for (std::size_t n : {0u, 4u, 64u, 256u}) consider(coverage_link(n));
    for (std::size_t n : {0u, 1u, 4u, 16u}) {
        for (double ratio : {0.1, 10.0, 1e3}) consider({{1.0, 1.0, 1.0}, n, {ratio, 1.0}});
    }
    v.check(excess <= 0.0, "max(capacity - bound) " + num(excess) + " over " + std::to_string(configs) + " configs");

    // Log-log slope of the optimal bound's argument, least squares over N in [1e2, 1e5].
    const LargeScaleFading unit{1.0, 1.0, 1.0};
    std::vector<double> lx, ly;
    for (int i = 0; i <= 30; ++i) {
        const double n = std::round(100.0 * std::pow(1000.0, i / 30.0));
        lx.push_back(std::log(n));
        ly.push_back(std::log(analysis::moments_optimal(unit, static_cast<std::size_t>(n)).second_moment));
    }
    const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / lx.size();
    const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / ly.size();
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxy += (lx[i] - mx) * (ly[i] - my);
        sxx += (lx[i] - mx) * (lx[i] - mx);
    }
    const double slope = sxy / sxx;
    v.check(std::abs(slope - kSlopeTarget) <= kSlopeTol,
            "optimal bound argument log-log slope " + num(slope) + " (target " + num(kSlopeTarget) + " +/- " +
                num(kSlopeTol) + ")");
    return v;
}

Verdict criterion_8()
{
    Verdict v;
    channel::ExperimentConfig cfg;
    cfg.scenario.shadowing_std_db = 4.0;  // drop model defaults: 200 drops, x in [50, 200]
    const auto t = cli::run_figure2(cfg, cli::Figure2Params{});
    bool monotone_closed = true, monotone_mc = true;
    double prev_closed = 0.0, prev_mc = 0.0;
    double worst_siso_z = 0.0;
    std::ostringstream ratios;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const double rc = *t.at(i, "closed_form_optimal") / *t.at(i, "closed_form_arbitrary");
        const double rm = *t.at(i, "monte_carlo_optimal") / *t.at(i, "monte_carlo_arbitrary");
        if (i > 0) {
            monotone_closed = monotone_closed && rc > prev_closed;
            monotone_mc = monotone_mc && rm > prev_mc;
        }
        prev_closed = rc;
        prev_mc = rm;
        ratios << (i ? "," : "") << num(rc, 4);
        const double z = std::abs(*t.at(i, "monte_carlo_arbitrary") - *t.at(i, "siso_baseline")) /
                         *t.at(i, "mc_std_error_arbitrary");
        worst_siso_z = std::max(worst_siso_z, z);
    }
    const double n_max = *t.at(t.rows.size() - 1, "n");
    v.check(monotone_closed && monotone_mc, "ratio monotone in N (closed " + std::string(monotone_closed ? "yes" : "no") +
                                                ", MC " + (monotone_mc ? "yes" : "no") + "): " + ratios.str());
    v.check(std::abs(prev_closed - kRatioTarget) <= kRatioTol && std::abs(prev_mc - kRatioTarget) <= kRatioTol,
            "ratio at N=" + num(n_max) + " closed " + num(prev_closed) + ", MC " + num(prev_mc) + " (target " +
                num(kRatioTarget) + " +/- " + num(kRatioTol) + ")");
    v.check(worst_siso_z <= kSisoSigmas,
            "arbitrary MC vs SISO max |z| " + num(worst_siso_z, 3) + " (tol " + num(kSisoSigmas) + ")");
    return v;
}

std::string run_cli(std::vector<std::string> args)
{
    std::vector<const char*> argv{"irsperf"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run_app(static_cast<int>(argv.size()), argv.data(), out, err);
    return std::to_string(code) + "\n" + out.str();
}

Verdict criterion_9()
{
    Verdict v;
    const std::vector<std::vector<std::string>> commands{
        {"figure1", "--trials", "20000"},
        {"figure2", "--trials", "200", "--drops", "10"},
        {"coverage", "--trials", "20000", "--n-grid", "0,16,256", "--xi-grid", "0:0.5:6"},
        {"capacity", "--trials", "20000", "--n-grid", "0,4,64"},
        {"validate", "--trials", "100000"},
    };
    for (const auto& args : commands) {
        auto threaded = args;
        threaded.insert(threaded.end(), {"--threads", "3"});
        const std::string first = run_cli(args);
        const std::string second = run_cli(args);
        const std::string third = run_cli(threaded);
        v.check(first == second && first == third && first.size() > 2,
                args[0] + (first == second && first == third ? " identical" : " differs") + " (" +
                    std::to_string(first.size()) + " bytes)");
    }
    return v;
}

const std::map<int, std::pair<std::string, std::function<Verdict()>>>& registry()
{
    static const std::map<int, std::pair<std::string, std::function<Verdict()>>> r{
        {1, {"coverage closed form vs simulation", criterion_1}},
        {2, {"ergodic capacity closed form vs simulation", criterion_2}},
        {3, {"MeijerG form equals tail integral", criterion_3}},
        {4, {"simulated moments of X and C", criterion_4}},
        {5, {"product amplitude law", criterion_5}},
        {6, {"degenerate exactness", criterion_6}},
        {7, {"Jensen bounds", criterion_7}},
        {8, {"capacity ratio versus N over random drops", criterion_8}},
        {9, {"byte-identical output", criterion_9}},
    };
    return r;
}

}  // namespace

int main(int argc, char** argv)
{
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
    if (ids.empty()) {
        for (const auto& [id, entry] : registry()) ids.push_back(id);
    }
    bool all = true;
    for (int id : ids) {
        const auto it = registry().find(id);
        if (it == registry().end()) {
            std::printf("FAIL criterion %d: unknown criterion\n", id);
            all = false;
            continue;
        }
        const auto start = std::chrono::steady_clock::now();
        Verdict verdict;
        try {
            verdict = it->second.second();
        } catch (const std::exception& e) {
            verdict.check(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::string notes;
        for (const auto& n : verdict.notes) notes += (notes.empty() ? "" : "; ") + n;
        std::printf("%s criterion %d: %s [%s] (%.1f s)\n", verdict.pass ? "PASS" : "FAIL", id,
                    it->second.first.c_str(), notes.c_str(), secs);
        std::fflush(stdout);
        all = all && verdict.pass;
    }
    return all ? 0 : 1;
}
