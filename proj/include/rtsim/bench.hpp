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
 * @file bench.hpp
 * @brief Benchmark scenarios for timeline-length and speedup measurements.
 *
 * A scan scenario runs points x samples iterations. Every sample performs the
 * cooling/pumping block (DDS sets and TTL pulses) followed by a fixed delay.
 * Unbuffered scenarios synchronize the cursor to the counter after every
 * sample; buffered scenarios after every batch of 16 samples and after the
 * final partial batch. One extra synchronization starts the kernel.
 *
 * Timeline length follows the measurement protocol of the hardware
 * comparison: cursor at the end minus cursor after the first synchronization.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rtsim/device_db.hpp"
#include "rtsim/environment.hpp"

namespace rtsim::bench {

inline constexpr std::int64_t kBufferBatch = 16;

struct BenchScenario {
    std::string name = "scan";
    std::int64_t points = 20;
    std::int64_t samples_per_point = 100;
    std::int64_t ttl_pulses = 3;
    std::int64_t dds_sets = 1;
    TimeMu pulse_mu = 10'000;
    TimeMu delay_per_sample_mu = 100'000;
    bool buffered = false;

    [[nodiscard]] std::int64_t ops_per_sample() const { return ttl_pulses + dds_sets; }
    [[nodiscard]] std::int64_t total_samples() const { return points * samples_per_point; }
    /// Throws ConfigError if any count is below one or a duration is invalid.
    void validate() const;
};

/// Synchronizations the scenario performs, including the initial one.
std::uint64_t expected_sync_count(const BenchScenario &scenario);

/// Experiment that executes \p scenario against the TTL outputs and the
/// first DDS of the device database.
Experiment make_experiment(const BenchScenario &scenario);

struct BenchRow {
    std::string scenario;
    SyncMode mode = SyncMode::Regular;
    TimeMu timeline_length_mu = 0;
    TimeMu start_cursor_mu = 0;
    TimeMu final_cursor_mu = 0;
    std::size_t event_count = 0;
    std::uint64_t sync_count = 0;
    std::int64_t wall_clock_ns = 0;
    /// Simulated timeline seconds per wall-clock second.
    double speedup_proxy = 0.0;
    std::optional<double> relative_error;
};

struct BenchReport {
    BenchRow regular;
    BenchRow optimistic;

    [[nodiscard]] TimeMu timeline_length_regular_mu() const { return regular.timeline_length_mu; }
    [[nodiscard]] TimeMu timeline_length_optimistic_mu() const {
        return optimistic.timeline_length_mu;
    }
};

/// (t_sim - t_ref) / t_ref. Throws Error for t_ref == 0.
double relative_error(double t_sim, double t_ref);

BenchRow run_scenario(const BenchScenario &scenario, const DeviceDb &ddb, const SimConfig &config);
/// Runs the scenario under the regular and the optimistic configuration.
BenchReport run_bench(const BenchScenario &scenario, const DeviceDb &ddb, std::uint64_t seed);

/// Scenarios shipped with the tool: scan, scan_buffered, delay_dominated,
/// event_dominated.
std::vector<BenchScenario> bundled_scenarios();
const BenchScenario &bundled_scenario(std::string_view name);

/// Hardware reference lengths keyed by scenario name. CSV columns:
/// scenario,t_exe_mu (header row required).
std::map<std::string, TimeMu> read_reference_csv(std::istream &in);
std::map<std::string, TimeMu> load_reference_csv(const std::string &path);

/// Fills relative_error for rows whose scenario has a reference length.
void apply_reference(std::vector<BenchRow> &rows, const std::map<std::string, TimeMu> &reference);

/// Header plus one line per row. The relative_error column is present only
/// when \p with_relative_error is set.
void write_csv(std::ostream &out, const std::vector<BenchRow> &rows, bool with_relative_error);

}  // namespace rtsim::bench
