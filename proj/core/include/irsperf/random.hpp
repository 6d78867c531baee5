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
#include <complex>
#include <cstdint>
#include <utility>

namespace irsperf {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
/// A pure function of (counter, key); no internal state.
struct Philox4x32 {
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Counter generate(Counter counter, Key key) noexcept;
};

/// What a substream is used for. Distinct purposes never share random numbers.
enum class StreamPurpose : std::uint32_t {
    Channel = 1,
    Phase = 2,
    Drop = 3,
    Generic = 4,
};

/// Identifies an independent substream under one seed. Every field goes
/// into the Philox counter verbatim, so distinct ids never overlap.
struct Substream {
    StreamPurpose purpose = StreamPurpose::Generic;
    std::uint32_t drop = 0;
    std::uint32_t trial = 0;
};

/// Sequential view on one Philox substream. Each draw consumes one counter
/// block, so results depend only on (seed, substream, draw index).
class RandomStream {
public:
    RandomStream(std::uint64_t seed, Substream id) noexcept;

    /// Uniform on the open interval (0, 1), 53-bit resolution.
    double uniform() noexcept;

    /// Two independent uniforms on (0, 1) from a single counter block.
    std::pair<double, double> uniform_pair() noexcept;

    /// Two independent standard normals (Box-Muller on one counter block).
    std::pair<double, double> normal_pair() noexcept;

    /// Circularly-symmetric complex Gaussian CN(0, variance).
    std::complex<double> complex_normal(double variance) noexcept;

    std::uint64_t seed() const noexcept { return seed_; }
    Substream id() const noexcept { return id_; }
    std::uint32_t position() const noexcept { return position_; }

private:
    Philox4x32::Counter next_block() noexcept;

    std::uint64_t seed_;
    Substream id_;
    Philox4x32::Key key_;
    std::uint32_t position_ = 0;
};

}  // namespace irsperf
