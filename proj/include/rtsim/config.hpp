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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace rtsim {

/// Timestamp or duration in machine units. One MU is one nanosecond at the
/// default reference period.
using TimeMu = std::int64_t;

/// Cursor slack inserted after every cursor-to-counter synchronization in the
/// regular configuration.
inline constexpr TimeMu kRegularSyncSlackMu = 125'000;

enum class SyncMode { Regular, Optimistic };

std::string_view to_string(SyncMode mode);
/// Parses "regular" or "optimistic"; throws ConfigError otherwise.
SyncMode parse_sync_mode(std::string_view text);

struct SimConfig {
    SyncMode mode = SyncMode::Regular;
    TimeMu sync_slack_mu = kRegularSyncSlackMu;
    double ref_period_s = 1e-9;
    std::uint64_t seed = 0;

    /// Configuration with the slack implied by \p mode.
    static SimConfig for_mode(SyncMode mode, std::uint64_t seed = 0);
    static SimConfig regular(std::uint64_t seed = 0) { return for_mode(SyncMode::Regular, seed); }
    static SimConfig optimistic(std::uint64_t seed = 0) { return for_mode(SyncMode::Optimistic, seed); }

    /// Throws ConfigError for a negative slack or a non-positive reference period.
    void validate() const;
};

/// Name of the environment variable that overrides SimConfig::seed.
inline constexpr const char *kSeedEnvVar = "RTSIM_SEED";

/// Parses a decimal unsigned 64-bit seed. Throws ConfigError on malformed input.
std::uint64_t parse_seed(std::string_view text);

/// Seed taken from RTSIM_SEED, if the variable is set.
std::optional<std::uint64_t> seed_from_environment();

namespace checked {

/// a + b, throwing OverflowError naming \p op on wrap-around.
TimeMu add(TimeMu a, TimeMu b, const char *op);
TimeMu sub(TimeMu a, TimeMu b, const char *op);

}  // namespace checked

}  // namespace rtsim
