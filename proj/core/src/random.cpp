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

#include <cmath>
#include <numbers>

namespace irsperf {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) noexcept
{
    const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(product >> 32);
    lo = static_cast<std::uint32_t>(product);
}

// Maps 64 random bits to the open interval (0, 1).
inline double to_open_unit(std::uint32_t hi, std::uint32_t lo) noexcept
{
    const std::uint64_t bits = ((static_cast<std::uint64_t>(hi) << 32) | lo) >> 11;
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

}  // namespace

Philox4x32::Counter Philox4x32::generate(Counter c, Key k) noexcept
{
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            k[0] += kWeyl0;
            k[1] += kWeyl1;
        }
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, c[0], hi0, lo0);
        mulhilo(kMul1, c[2], hi1, lo1);
        c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
    }
    return c;
}

RandomStream::RandomStream(std::uint64_t seed, Substream id) noexcept
    : seed_(seed),
      id_(id),
      key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)}
{
}

Philox4x32::Counter RandomStream::next_block() noexcept
{
    const Philox4x32::Counter counter{position_++, id_.trial, id_.drop,
                                      static_cast<std::uint32_t>(id_.purpose)};
    return Philox4x32::generate(counter, key_);
}

double RandomStream::uniform() noexcept
{
    const auto block = next_block();
    return to_open_unit(block[0], block[1]);
}

std::pair<double, double> RandomStream::uniform_pair() noexcept
{
    const auto block = next_block();
    return {to_open_unit(block[0], block[1]), to_open_unit(block[2], block[3])};
}

std::pair<double, double> RandomStream::normal_pair() noexcept
{
    const auto [u1, u2] = uniform_pair();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

std::complex<double> RandomStream::complex_normal(double variance) noexcept
{
    const auto [re, im] = normal_pair();
    const double scale = std::sqrt(0.5 * variance);
    return {scale * re, scale * im};
}

}  // namespace irsperf
