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
#include "irsperf/analysis/gamma_fit.hpp"
#include "irsperf/analysis/moments.hpp"
#include "irsperf/errors.hpp"
#include "irsperf/monte_carlo.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

using namespace irsperf;
using namespace irsperf::monte_carlo;
using channel::LargeScaleFading;
using channel::Link;
using channel::PhasePolicy;

namespace {

Link unit_link(std::size_t n, double ratio = 10.0)
{
    return {{1.0, 1.0, 1.0}, n, {ratio, 1.0}};
}

SimConfig sim_of(std::size_t trials, std::uint64_t seed)
{
    SimConfig sim;
    sim.trials = trials;
    sim.seed = seed;
    return sim;
}

bool within(const EmpiricalEstimate& e, double expected, double n_se)
{
    return std::abs(e.mean - expected) <= n_se * e.std_error;
}

}  // namespace

TEST_CASE("zero rate requirement is always met")
{
    const std::vector<double> xi{0.0, 1.0};
    const auto cov = simulate_coverage(unit_link(3), PhasePolicy::Arbitrary, xi, sim_of(5000, 1));
    CHECK(cov[0].mean == 1.0);
    CHECK(cov[0].std_error == 0.0);
    CHECK(cov[0].trials == 5000);
    const auto both = simulate_coverage_both(unit_link(3), xi, sim_of(5000, 1));
    CHECK(both.optimal[0].mean == 1.0);
    CHECK(both.arbitrary[0].mean == 1.0);
}

TEST_CASE("vanishing power gives no coverage and no capacity")
{
    const Link dead = unit_link(8, 1e-300);
    const std::vector<double> xi{0.5, 2.0};
    for (auto p : {PhasePolicy::Arbitrary, PhasePolicy::Optimal}) {
        const auto cov = simulate_coverage(dead, p, xi, sim_of(2000, 3));
        CHECK(cov[0].mean == 0.0);
        CHECK(cov[1].mean == 0.0);
        CHECK(simulate_capacity(dead, p, sim_of(2000, 3)).mean < 1e-250);
    }
}

TEST_CASE("coverage standard error is the binomial one")
{
    const std::vector<double> xi{3.0};
    const auto e = simulate_coverage(unit_link(4), PhasePolicy::Arbitrary, xi, sim_of(20000, 8))[0];
    REQUIRE(e.mean > 0.0);
    REQUIRE(e.mean < 1.0);
    const double n = 20000.0;
    CHECK(std::abs(e.std_error - std::sqrt(e.mean * (1.0 - e.mean) / (n - 1.0))) < 1e-15);
}

TEST_CASE("optimal phases dominate on the same draws")
{
    const auto c = simulate_capacity_both(unit_link(16), sim_of(20000, 11));
    CHECK(c.optimal.mean >= c.arbitrary.mean);
    const auto single_o = simulate_capacity(unit_link(16), PhasePolicy::Optimal, sim_of(20000, 11));
    const auto single_a = simulate_capacity(unit_link(16), PhasePolicy::Arbitrary, sim_of(20000, 11));
    CHECK(single_o.mean >= single_a.mean);
    // the combined pass draws exactly what the single-policy passes draw
    CHECK(single_o.mean == c.optimal.mean);
    CHECK(single_a.mean == c.arbitrary.mean);

    const std::vector<double> xi{1.0, 4.0, 7.0};
    const auto cov = simulate_coverage_both(unit_link(16), xi, sim_of(20000, 11));
    for (std::size_t j = 0; j < xi.size(); ++j) CHECK(cov.optimal[j].mean >= cov.arbitrary[j].mean);
}

TEST_CASE("results do not depend on chunking or thread count")
{
    const Link link = unit_link(6);
    const std::vector<double> xi{0.5, 2.0, 5.0};
    SimConfig base = sim_of(37000, 2024);  // not a multiple of any block size
    base.threads = 1;
    const auto cov_ref = simulate_coverage_both(link, xi, base);
    const auto cap_ref = simulate_capacity_both(link, base);
    const auto mom_ref = empirical_moments_both(link, PhasePolicy::Arbitrary, base);

    for (std::size_t chunk : {1u, 1000u, 4096u, 100000u}) {
        for (std::size_t threads : {1u, 2u, 5u}) {
            SimConfig sim = base;
            sim.chunk_size = chunk;
            sim.threads = threads;
            INFO("chunk " << chunk << ", threads " << threads);
            const auto cov = simulate_coverage_both(link, xi, sim);
            for (std::size_t j = 0; j < xi.size(); ++j) {
                CHECK(cov.arbitrary[j].mean == cov_ref.arbitrary[j].mean);
                CHECK(cov.optimal[j].mean == cov_ref.optimal[j].mean);
            }
            const auto cap = simulate_capacity_both(link, sim);
            CHECK(cap.arbitrary.mean == cap_ref.arbitrary.mean);
            CHECK(cap.optimal.std_error == cap_ref.optimal.std_error);
            const auto mom = empirical_moments_both(link, PhasePolicy::Arbitrary, sim);
            CHECK(mom.x.variance.mean == mom_ref.x.variance.mean);
            CHECK(mom.c.second_moment.std_error == mom_ref.c.second_moment.std_error);
        }
    }
}

TEST_CASE("independent seeds agree within their combined error")
{
    const std::vector<double> xi{1.0, 3.0, 5.0, 7.0};
    const auto a = simulate_coverage_both(unit_link(8), xi, sim_of(40000, 1));
    const auto b = simulate_coverage_both(unit_link(8), xi, sim_of(40000, 2));
    for (std::size_t j = 0; j < xi.size(); ++j) {
        for (auto [x, y] : {std::pair{a.arbitrary[j], b.arbitrary[j]}, std::pair{a.optimal[j], b.optimal[j]}}) {
            const double combined = std::hypot(x.std_error, y.std_error);
            CHECK(std::abs(x.mean - y.mean) < 6.0 * combined + 1e-300);
        }
    }
    CHECK(a.arbitrary[1].mean != b.arbitrary[1].mean);
}

TEST_CASE("empirical moments of X and C against the closed forms")
{
    for (const auto& f : {LargeScaleFading{1.0, 1.0, 1.0}, LargeScaleFading{0.3, 2.0, 0.6}}) {
        for (std::size_t n : {0u, 2u, 9u}) {
            const Link link{f, n, {1.0, 1.0}};
            const auto m = empirical_moments_both(link, PhasePolicy::Arbitrary, sim_of(400000, 17 + n));
            const auto ax = analysis::moments_arbitrary(f, n);
            const auto ac = analysis::moments_optimal(f, n);
            INFO("N = " << n << ", beta_sd = " << f.beta_sd);
            CHECK(within(m.x.mean, ax.mean, 3.5));
            CHECK(within(m.x.second_moment, ax.second_moment, 3.5));
            CHECK(within(m.x.variance, ax.variance, 3.5));
            CHECK(within(m.c.mean, ac.mean, 3.5));
            CHECK(within(m.c.variance, ac.variance, 3.5));
        }
    }
    const auto x = empirical_moments(unit_link(0), PhasePolicy::Arbitrary, Statistic::PowerX, sim_of(400000, 5));
    CHECK(within(x.mean, 1.0, 3.5));
    CHECK(within(x.variance, 1.0, 3.5));
    // under optimal phases X is C^2
    const auto opt = empirical_moments_both(unit_link(4), PhasePolicy::Optimal, sim_of(100000, 5));
    CHECK(std::abs(opt.x.mean.mean - opt.c.second_moment.mean) <= 1e-12 * opt.x.mean.mean);
}

TEST_CASE("product magnitudes follow the Bessel-K law")
{
    const LargeScaleFading f{1.0, 0.5, 2.0};
    const std::size_t n = 1000000;
    auto b = sample_product_magnitudes(f, n, sim_of(n, 99));
    REQUIRE(b.size() == n);
    CHECK(b == sample_product_magnitudes(f, n, sim_of(n, 99)));
    std::sort(b.begin(), b.end());
    double d = 0.0;
    for (std::size_t i = 0; i < n; i += 7) {
        const double cdf = analysis::product_cdf(f, b[i]);
        d = std::max({d, std::abs(cdf - static_cast<double>(i) / n), std::abs(static_cast<double>(i + 1) / n - cdf)});
    }
    // DKW: Pr(sup |F_n - F| > eps) <= 2 exp(-2 n eps^2); alpha = 0.001
    const double eps = std::sqrt(std::log(2.0 / 0.001) / (2.0 * n));
    INFO("sup deviation " << d << ", band " << eps);
    CHECK(d < eps);
}

TEST_CASE("a single shadowed drop with a large surface matches the closed form")
{
    channel::Scenario s;
    s.dest_pos = {130.0, 0.0};
    const Link link = channel::make_link(s, channel::PathLossModel{}, {2.1, -3.4, 1.7});
    const Link with_n{link.fading, 256, link.snr};
    const auto mc = simulate_capacity_both(with_n, sim_of(40000, 31));
    const auto fa = analysis::fit_gamma_arbitrary(with_n.fading, 256);
    const auto fo = analysis::fit_gamma_optimal(with_n.fading, 256);
    const double ca = analysis::ergodic_capacity(PhasePolicy::Arbitrary, fa, with_n.snr).value;
    const double co = analysis::ergodic_capacity(PhasePolicy::Optimal, fo, with_n.snr).value;
    CHECK(std::abs(ca - mc.arbitrary.mean) / mc.arbitrary.mean < 0.02);
    CHECK(std::abs(co - mc.optimal.mean) / mc.optimal.mean < 0.02);
}

TEST_CASE("simulation arguments are validated")
{
    const std::vector<double> none;
    const std::vector<double> negative{-0.5};
    CHECK_THROWS_AS(simulate_coverage(unit_link(1), PhasePolicy::Optimal, none, sim_of(10, 1)), DomainError);
    CHECK_THROWS_AS(simulate_coverage(unit_link(1), PhasePolicy::Optimal, negative, sim_of(10, 1)), DomainError);
    CHECK_THROWS_AS(simulate_capacity(unit_link(1), PhasePolicy::Optimal, sim_of(0, 1)), DomainError);
    SimConfig bad = sim_of(10, 1);
    bad.chunk_size = 0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    CHECK_THROWS_AS(simulate_capacity({{0.0, 1.0, 1.0}, 1, {1.0, 1.0}}, PhasePolicy::Optimal, sim_of(10, 1)),
                    DomainError);
}
