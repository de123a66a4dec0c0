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
 * @file devices.hpp
 * @brief Simulation drivers exposing functional device APIs.
 *
 * Drivers translate API calls into signal pushes at the current cursor,
 * cursor delays from a fixed per-operation timing model, and input-buffer
 * traffic for devices that return values. Input devices derive their return
 * values from input signals that a test configures.
 */

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rtsim/config.hpp"
#include "rtsim/input_buffer.hpp"
#include "rtsim/rng.hpp"
#include "rtsim/signals.hpp"
#include "rtsim/timeline.hpp"

namespace rtsim {

enum class DeviceKind { Core, TtlOut, TtlIn, EdgeCounter, Dds, Adc };

std::string_view to_string(DeviceKind kind);
std::optional<DeviceKind> parse_device_kind(std::string_view text);
std::span<const DeviceKind> all_device_kinds();

struct DeviceDescriptor {
    std::string name;
    DeviceKind kind = DeviceKind::Core;
    nlohmann::json params = nlohmann::json::object();

    /// Integer parameter or \p fallback when absent. Throws ConfigError on a type mismatch.
    [[nodiscard]] std::int64_t int_param(std::string_view key, std::int64_t fallback) const;
    [[nodiscard]] std::string string_param(std::string_view key, std::string_view fallback) const;
};

/// Parameter keys each device kind accepts in the device database.
std::span<const std::string_view> allowed_params(DeviceKind kind);

/// Throws ConfigError if a parameter is unknown for the kind or out of range.
void validate_params(const DeviceDescriptor &descriptor);

namespace timing {
inline constexpr TimeMu kDdsInitDelayMu = 125'000;
inline constexpr TimeMu kDdsSetDelayMu = 0;
inline constexpr TimeMu kSampleDelayMu = 0;
}  // namespace timing

class Driver {
  public:
    Driver(DeviceDescriptor descriptor, TimeManager &time, SignalManager &signals);
    Driver(const Driver &) = delete;
    Driver &operator=(const Driver &) = delete;
    virtual ~Driver() = default;

    [[nodiscard]] const std::string &name() const { return descriptor_.name; }
    [[nodiscard]] DeviceKind kind() const { return descriptor_.kind; }
    [[nodiscard]] const DeviceDescriptor &descriptor() const { return descriptor_; }

  protected:
    SignalId add_signal(std::string_view signal, ValueKind kind,
                        SignalClass cls = SignalClass::Output);
    /// Pushes \p value onto \p id at the current cursor.
    void emit(SignalId id, SignalValue value);
    /// Input-signal value at the current cursor; throws DeviceError if never set.
    [[nodiscard]] double input_at_cursor(SignalId id) const;
    [[nodiscard]] TimeMu delay_param(std::string_view key, TimeMu fallback) const;

    TimeManager &time_;
    SignalManager &signals_;

  private:
    DeviceDescriptor descriptor_;
};

class CoreDriver : public Driver {
  public:
    CoreDriver(DeviceDescriptor descriptor, TimeManager &time, SignalManager &signals);

    /// Synchronizes the cursor to the (estimated) RTIO counter.
    void reset();
    /// Same synchronization, used mid-experiment to regain slack.
    void break_realtime();

    [[nodiscard]] TimeMu seconds_to_mu(double seconds) const;
    [[nodiscard]] double mu_to_seconds(TimeMu mu) const;

    /// Records a kernel boundary on the "kernel" signal.
    void mark_kernel(std::string_view kernel_name);

  private:
    SignalId kernel_;
};

class TtlOut : public Driver {
  public:
    TtlOut(DeviceDescriptor descriptor, TimeManager &time, SignalManager &signals);

    void on();
    void off();
    void set_o(bool level);
    /// on(); delay_mu(duration); off(). Requires duration > 0.
    void pulse_mu(TimeMu duration);
    void pulse(double seconds);

  private:
    SignalId state_;
};

class TtlIn : public Driver {
  public:
    TtlIn(DeviceDescriptor descriptor, TimeManager &time, SignalManager &signals);

    /// Draws Bernoulli(p) with p the input probability at the cursor and
    /// queues the result.
    void sample_input();
    /// Consumes the oldest queued sample (0 or 1).
    std::int64_t sample_get();

    [[nodiscard]] SignalId probability_signal() const { return probability_; }
    [[nodiscard]] const InputBuffer<std::int64_t> &buffer() const { return buffer_; }

  private:
    SignalId probability_;
    TimeMu sample_delay_mu_;
    rng::Stream rng_;
    InputBuffer<std::int64_t> buffer_;
};

enum class CounterMode { Deterministic, Poisson };

class EdgeCounter : public Driver {
  public:
    EdgeCounter(DeviceDescriptor descriptor, TimeManager &time, SignalManager &signals);

    /// Opens the gate for \p duration, queues the edge count, and returns the
    /// cursor at gate close.
    TimeMu gate_rising_mu(TimeMu duration);
    TimeMu gate_rising(double seconds);
    std::int64_t fetch_count();

    [[nodiscard]] CounterMode mode() const { return mode_; }
    [[nodiscard]] SignalId frequency_signal() const { return frequency_; }
    [[nodiscard]] const InputBuffer<std::int64_t> &buffer() const { return buffer_; }

  private:
    SignalId gate_;
    SignalId frequency_;
    CounterMode mode_;
    rng::Stream rng_;
    InputBuffer<std::int64_t> buffer_;
};

class Dds : public Driver {
  public:
    Dds(DeviceDescriptor descriptor, TimeManager &time, SignalManager &signals);

    void init();
    /// Frequency in Hz (>= 0), phase in turns [0, 1), amplitude [0, 1].
    void set(double frequency_hz, double phase_turns = 0.0, double amplitude = 1.0);

  private:
    SignalId initialized_;
    SignalId frequency_;
    SignalId phase_;
    SignalId amplitude_;
    TimeMu init_delay_mu_;
    TimeMu set_delay_mu_;
};

class Adc : public Driver {
  public:
    Adc(DeviceDescriptor descriptor, TimeManager &time, SignalManager &signals);

    /// Queues the input voltage of every channel at the cursor.
    void sample_input();
    std::vector<double> read();
    /// sample_input() followed by read().
    std::vector<double> sample();

    [[nodiscard]] std::size_t channels() const { return voltages_.size(); }
    [[nodiscard]] SignalId voltage_signal(std::size_t channel) const;
    [[nodiscard]] const InputBuffer<std::vector<double>> &buffer() const { return buffer_; }

  private:
    std::vector<SignalId> voltages_;
    TimeMu sample_delay_mu_;
    InputBuffer<std::vector<double>> buffer_;
};

/// Instantiates the driver matching descriptor.kind and registers its signals.
std::unique_ptr<Driver> make_driver(const DeviceDescriptor &descriptor, TimeManager &time,
                                    SignalManager &signals);

}  // namespace rtsim
