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

#include "rtsim/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

#include "rtsim/errors.hpp"

namespace rtsim {

std::string_view to_string(SyncMode mode) {
    return mode == SyncMode::Regular ? "regular" : "optimistic";
}

SyncMode parse_sync_mode(std::string_view text) {
    if (text == "regular") {
        return SyncMode::Regular;
    }
    if (text == "optimistic") {
        return SyncMode::Optimistic;
    }
    throw ConfigError("unknown synchronization configuration '" + std::string(text) +
                      "' (expected 'regular' or 'optimistic')");
}

SimConfig SimConfig::for_mode(SyncMode mode, std::uint64_t seed) {
    SimConfig config;
    config.mode = mode;
    config.sync_slack_mu = mode == SyncMode::Regular ? kRegularSyncSlackMu : 0;
    config.seed = seed;
    return config;
}

void SimConfig::validate() const {
    if (sync_slack_mu < 0) {
        throw ConfigError("sync slack must be non-negative, got " + std::to_string(sync_slack_mu));
    }
    if (!std::isfinite(ref_period_s) || ref_period_s <= 0.0) {
        throw ConfigError("reference period must be a positive finite number of seconds");
    }
}

std::uint64_t parse_seed(std::string_view text) {
    std::uint64_t value = 0;
    const auto *first = text.data();
    const auto *last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value, 10);
    if (text.empty() || ec != std::errc{} || ptr != last) {
        throw ConfigError("invalid seed '" + std::string(text) +
                          "' (expected a decimal unsigned 64-bit integer)");
    }
    return value;
}

std::optional<std::uint64_t> seed_from_environment() {
    const char *raw = std::getenv(kSeedEnvVar);
    if (raw == nullptr) {
        return std::nullopt;
    }
    return parse_seed(raw);
}

namespace checked {

TimeMu add(TimeMu a, TimeMu b, const char *op) {
    TimeMu out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw OverflowError(std::string("time overflow in ") + op + ": " + std::to_string(a) +
                            " + " + std::to_string(b));
    }
    return out;
}

TimeMu sub(TimeMu a, TimeMu b, const char *op) {
    TimeMu out = 0;
    if (__builtin_sub_overflow(a, b, &out)) {
        throw OverflowError(std::string("time overflow in ") + op + ": " + std::to_string(a) +
                            " - " + std::to_string(b));
    }
    return out;
}

}  // namespace checked

}  // namespace rtsim
