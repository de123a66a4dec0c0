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

#include "rtsim/environment.hpp"

namespace rtsim {

TimeMu RunStats::timeline_length() const {
    return checked::sub(final_cursor, start_cursor(), "timeline_length");
}

SimulationRun::SimulationRun(DeviceDb ddb, SimConfig config)
    : ddb_(std::move(ddb)),
      config_(config),
      time_(config_),
      signals_([this](TimeMu t) { time_.observe_event(t); }) {
    // throws for a database without a core
    (void)ddb_.core();
}

Driver &SimulationRun::device(std::string_view name) {
    if (auto it = drivers_.find(name); it != drivers_.end()) {
        return *it->second;
    }
    const DeviceDescriptor *descriptor = ddb_.find(name);
    if (descriptor == nullptr) {
        throw DeviceError("unknown device '" + std::string(name) + "'");
    }
    auto driver = make_driver(*descriptor, time_, signals_);
    Driver &ref = *driver;
    drivers_.emplace(std::string(name), std::move(driver));
    return ref;
}

void SimulationRun::execute(const Experiment &experiment) {
    if (executed_) {
        throw Error("simulation run already executed '" + experiment_name_ + "'");
    }
    executed_ = true;
    experiment_name_ = experiment.name;
    Environment env(*this);
    auto begin = std::chrono::steady_clock::now();
    try {
        if (experiment.body) {
            experiment.body(env);
        }
    } catch (const std::exception &err) {
        error_ = err.what();
    }
    auto end = std::chrono::steady_clock::now();
    wall_clock_ns_ = std::chrono::duration_cast<std::chrono::nanoseconds>(end - begin).count();
}

RunStats SimulationRun::stats() const {
    RunStats stats;
    stats.event_count = signals_.event_count();
    stats.sync_count = time_.sync_count();
    stats.start_cursor_after_first_sync = time_.first_sync_cursor();
    stats.final_cursor = time_.now_mu();
    stats.wall_clock_ns = wall_clock_ns_;
    return stats;
}

std::unique_ptr<SimulationRun> run_experiment(const Experiment &experiment, const DeviceDb &ddb,
                                              SimConfig config) {
    if (auto seed = seed_from_environment()) {
        config.seed = *seed;
    }
    auto run = std::make_unique<SimulationRun>(ddb, config);
    run->execute(experiment);
    return run;
}

}  // namespace rtsim
