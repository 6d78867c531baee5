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

#include "irsperf/random.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

using namespace irsperf;

TEST_CASE("Philox4x32-10 reproduces the published known-answer vectors")
{
    using P = Philox4x32;
    CHECK(P::generate({0, 0, 0, 0}, {0, 0}) == P::Counter{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
    CHECK(P::generate({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, {0xffffffffu, 0xffffffffu}) ==
          P::Counter{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
    CHECK(P::generate({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, {0xa4093822u, 0x299f31d0u}) ==
          P::Counter{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("streams are a pure function of seed, substream and draw index")
{
    RandomStream a(42, {StreamPurpose::Channel, 3, 17});
    RandomStream b(42, {StreamPurpose::Channel, 3, 17});
    for (int i = 0; i < 100; ++i) REQUIRE(a.uniform() == b.uniform());
    CHECK(a.position() == 100);

    RandomStream other_trial(42, {StreamPurpose::Channel, 3, 18});
    RandomStream other_purpose(42, {StreamPurpose::Phase, 3, 17});
    RandomStream other_seed(43, {StreamPurpose::Channel, 3, 17});
    RandomStream fresh(42, {StreamPurpose::Channel, 3, 17});
    const double first = fresh.uniform();
    CHECK(first != other_trial.uniform());
    CHECK(first != other_purpose.uniform());
    CHECK(first != other_seed.uniform());
}

TEST_CASE("uniforms stay strictly inside (0, 1) and have the right mean")
{
    RandomStream rng(1, {});
    double sum = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        REQUIRE(u > 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    CHECK(std::abs(sum / n - 0.5) < 4.0 * std::sqrt(1.0 / 12.0 / n));
}

TEST_CASE("complex normals have the requested variance split evenly")
{
    RandomStream rng(9, {StreamPurpose::Generic, 0, 0});
    const int n = 400000;
    const double variance = 2.5;
    double re2 = 0.0, im2 = 0.0, cross = 0.0;
    for (int i = 0; i < n; ++i) {
        const auto z = rng.complex_normal(variance);
        re2 += z.real() * z.real();
        im2 += z.imag() * z.imag();
        cross += z.real() * z.imag();
    }
    // each component has variance 1.25 and fourth moment 3 * 1.25^2
    const double se = std::sqrt(2.0 * 1.25 * 1.25 / n);
    CHECK(std::abs(re2 / n - 1.25) < 4.0 * se);
    CHECK(std::abs(im2 / n - 1.25) < 4.0 * se);
    CHECK(std::abs(cross / n) < 4.0 * 1.25 / std::sqrt(n));
}
