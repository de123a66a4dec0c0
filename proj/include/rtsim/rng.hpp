/*
 * Copyright 2026 The rtsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file rng.hpp
 * @brief Reproducible random draws for simulated input devices.
 *
 * The engine is std::mt19937_64, whose output sequence is fixed by the C++
 * standard. Distributions are implemented here rather than taken from
 * <random> because the standard leaves their algorithms to the library vendor.
 *
 * Each device draws from its own substream, seeded from the simulation seed
 * and a FNV-1a hash of the device name, so adding or removing a device never
 * perturbs the draws of another.
 */

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace rtsim::rng {

/// 64-bit FNV-1a.
constexpr std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (char c : text) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

/// One step of the SplitMix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t substream_seed(std::uint64_t seed, std::string_view name) {
    return splitmix64(seed ^ splitmix64(fnv1a64(name)));
}

class Stream {
  public:
    explicit Stream(std::uint64_t seed) : engine_(seed) {}
    Stream(std::uint64_t seed, std::string_view name) : engine_(substream_seed(seed, name)) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) from the top 53 bits of one draw.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// 1 with probability \p p, else 0. Requires p in [0, 1].
    int bernoulli(double p) { return uniform() < p ? 1 : 0; }

    /// Poisson-distributed count with the given mean (>= 0).
    std::int64_t poisson(double mean);

  private:
    std::mt19937_64 engine_;
};

}  // namespace rtsim::rng
