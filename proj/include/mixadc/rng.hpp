// SPDX-License-Identifier: Apache-2.0
//
// mixadc: uplink rate and energy-efficiency analysis for mixed-ADC massive MIMO
// Copyright (C) 2026 The mixadc authors
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

#ifndef MIXADC_RNG_HPP
#define MIXADC_RNG_HPP

#include <cstdint>
#include <random>

namespace mixadc
{

using RngStream = std::mt19937_64;

// Independent stream domains. A stream is a pure function of (seed, domain, index).
enum class StreamDomain : std::uint64_t
{
    scenario = 1,
    channel = 2,
    quantizer = 3,
    validation = 4,
};

constexpr std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline RngStream make_stream(std::uint64_t seed, StreamDomain domain, std::uint64_t index = 0)
{
    const std::uint64_t a = splitmix64(seed);
    const std::uint64_t b = splitmix64(a ^ static_cast<std::uint64_t>(domain));
    const std::uint64_t c = splitmix64(b + index);
    std::seed_seq seq{static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    return RngStream(seq);
}

} // namespace mixadc

#endif
