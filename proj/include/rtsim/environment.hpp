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
 * @file environment.hpp
 * @brief Simulation runs and the experiment execution model.
 *
 * An experiment body is an ordinary callable that receives an Environment.
 * Host code and kernels share the process, so kernels are closures invoked
 * through Environment::kernel(), which runs them in a fresh sequential
 * context. A SimulationRun owns the time manager, the signal manager and the
 * drivers; drivers are instantiated lazily on first request.
 */

#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "rtsim/config.hpp"
#include "rtsim/device_db.hpp"
#include "rtsim/devices.hpp"
#include "rtsim/errors.hpp"
#include "rtsim/signals.hpp"
#include "rtsim/timeline.hpp"

namespace rtsim {

class Environment;

struct Experiment {
    std::string name;
    std::function<void(Environment &)> body;
    std::map<std::string, std::string> metadata;
};

struct RunStats {
    std::size_t event_count = 0;
    std::uint64_t sync_count = 0;
    std::optional<TimeMu> start_cursor_after_first_sync;
    TimeMu final_cursor = 0;
    std::int64_t wall_clock_ns = 0;

    /// Final cursor minus the cursor after the first synchronization (or
    /// minus zero when the program never synchronized).
    [[nodiscard]] TimeMu timeline_length() const;
    [[nodiscard]] TimeMu start_cursor() const { return start_cursor_after_first_sync.value_or(0); }
};

class SimulationRun {
  public:
    SimulationRun(DeviceDb ddb, SimConfig config);
    SimulationRun(const SimulationRun &) = delete;
    SimulationRun &operator=(const SimulationRun &) = delete;

    [[nodiscard]] const SimConfig &config() const { return config_; }
    [[nodiscard]] const DeviceDb &ddb() const { return ddb_; }
    TimeManager &time() { return time_; }
    [[nodiscard]] const TimeManager &time() const { return time_; }
    SignalManager &signals() { return signals_; }
    [[nodiscard]] const SignalManager &signals() const { return signals_; }

    /// Memoized driver for \p name; throws DeviceError for unknown names.
    Driver &device(std::string_view name);

    /// Typed access; throws DeviceError if the device has another kind.
    template <class T>
    T &device(std::string_view name) {
        Driver &driver = device(name);
        if (auto *typed = dynamic_cast<T *>(&driver)) {
            return *typed;
        }
        throw DeviceError("device '" + std::string(name) + "' has kind " +
                          std::string(to_string(driver.kind())) +
                          ", which does not provide the requested driver API");
    }

    CoreDriver &core() { return device<CoreDriver>(ddb_.core().name); }

    /// Runs \p experiment to completion in the root sequential context. An
    /// exception from the body is captured in error(); the partial timeline
    /// is kept.
    void execute(const Experiment &experiment);

    [[nodiscard]] RunStats stats() const;
    [[nodiscard]] bool executed() const { return executed_; }
    [[nodiscard]] bool failed() const { return error_.has_value(); }
    [[nodiscard]] const std::optional<std::string> &error() const { return error_; }
    [[nodiscard]] const std::string &experiment_name() const { return experiment_name_; }

  private:
    DeviceDb ddb_;
    SimConfig config_;
    TimeManager time_;
    SignalManager signals_;
    std::map<std::string, std::unique_ptr<Driver>, std::less<>> drivers_;
    bool executed_ = false;
    std::string experiment_name_;
    std::optional<std::string> error_;
    std::int64_t wall_clock_ns_ = 0;
};

/// Handle an experiment body uses to reach the timeline and the devices.
class Environment {
  public:
    explicit Environment(SimulationRun &run) : run_(run) {}

    SimulationRun &run() { return run_; }
    TimeManager &time() { return run_.time(); }
    SignalManager &signals() { return run_.signals(); }

    [[nodiscard]] TimeMu now_mu() const { return run_.time().now_mu(); }
    void delay_mu(TimeMu duration) { run_.time().delay_mu(duration); }
    void delay(double seconds) { run_.time().delay(seconds); }
    void at_mu(TimeMu t) { run_.time().at_mu(t); }

    ContextGuard parallel() { return run_.time().parallel(); }
    ContextGuard sequential() { return run_.time().sequential(); }
    template <class Body>
    void parallel(Body &&body) {
        run_.time().parallel(std::forward<Body>(body));
    }
    template <class Body>
    void sequential(Body &&body) {
        run_.time().sequential(std::forward<Body>(body));
    }

    CoreDriver &core() { return run_.core(); }

    template <class T>
    T &get(std::string_view name) {
        return run_.device<T>(name);
    }

    /// Runs \p body as a kernel: marks the entry on the core's "kernel"
    /// signal, then executes it inside a new sequential context.
    template <class Body>
    void kernel(std::string_view name, Body &&body) {
        core().mark_kernel(name);
        run_.time().sequential(std::forward<Body>(body));
    }

  private:
    SimulationRun &run_;
};

/// Fresh run of \p experiment. RTSIM_SEED, when set, replaces config.seed.
std::unique_ptr<SimulationRun> run_experiment(const Experiment &experiment, const DeviceDb &ddb,
                                              SimConfig config);

}  // namespace rtsim
