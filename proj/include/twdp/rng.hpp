// SPDX-License-Identifier: Apache-2.0
//
// twdp-phase: phase statistics of two-wave with diffuse power fading channels
// Copyright (C) 2026 twdp-phase contributors
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

#include <cstdint>
#include <random>

namespace twdp
{

    /// Seed for an independent work-unit stream: the (block+1)-th output of a
    /// splitmix64 sequence started at the master seed. Blocks can then be
    /// generated in any order, or in parallel, with identical results.
    inline std::uint64_t block_seed(std::uint64_t master, std::uint64_t block)
    {
        std::uint64_t z = master + (block + 1) * 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Canonical uniform draw in [0, 1) with 53 random bits. Hand-rolled so
    /// the stream is identical across standard-library implementations.
    inline double uniform01(std::mt19937_64 &rng)
    {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    }

    /// Uniform angle in (-pi, pi].
    inline double uniform_angle(std::mt19937_64 &rng)
    {
        return 3.14159265358979323846 * (1.0 - 2.0 * uniform01(rng));
    }

}
