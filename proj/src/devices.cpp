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

#include "rtsim/devices.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "rtsim/errors.hpp"

namespace rtsim {

namespace {

constexpr std::array kDeviceKinds{DeviceKind::Core,        DeviceKind::TtlOut, DeviceKind::TtlIn,
                                  DeviceKind::EdgeCounter, DeviceKind::Dds,    DeviceKind::Adc};

constexpr std::array<std::string_view, 1> kTtlInParams{"sample_delay_mu"};
constexpr std::array<std::string_view, 1> kEdgeCounterParams{"counter_mode"};
constexpr std::array<std::string_view, 2> kDdsParams{"init_delay_mu", "set_delay_mu"};
constexpr std::array<std::string_view, 2> kAdcParams{"channels", "sample_delay_mu"};

constexpr std::int64_t kMaxAdcChannels = 64;

bool is_delay_key(std::string_view key) {
    return key.size() > 9 && key.substr(key.size() - 9) == "_delay_mu";
}

}  // namespace

std::string_view to_string(DeviceKind kind) {
    switch (kind) {
    case DeviceKind::Core:
        return "core";
    case DeviceKind::TtlOut:
        return "ttl_out";
    case DeviceKind::TtlIn:
        return "ttl_in";
    case DeviceKind::EdgeCounter:
        return "edge_counter";
    case DeviceKind::Dds:
        return "dds";
    case DeviceKind::Adc:
        return "adc";
    }
    return "core";
}

std::optional<DeviceKind> parse_device_kind(std::string_view text) {
    for (DeviceKind kind : kDeviceKinds) {
        if (to_string(kind) == text) {
            return kind;
        }
    }
    return std::nullopt;
}

std::span<const DeviceKind> all_device_kinds() { return kDeviceKinds; }

std::span<const std::string_view> allowed_params(DeviceKind kind) {
    switch (kind) {
    case DeviceKind::TtlIn:
        return kTtlInParams;
    case DeviceKind::EdgeCounter:
        return kEdgeCounterParams;
    case DeviceKind::Dds:
        return kDdsParams;
    case DeviceKind::Adc:
        return kAdcParams;
    case DeviceKind::Core:
    case DeviceKind::TtlOut:
        break;
    }
    return {};
}

std::int64_t DeviceDescriptor::int_param(std::string_view key, std::int64_t fallback) const {
    auto it = params.find(key);
    if (it == params.end()) {
        return fallback;
    }
    if (!it->is_number_integer()) {
        throw ConfigError("device '" + name + "': parameter '" + std::string(key) +
                          "' must be an integer");
    }
    return it->get<std::int64_t>();
}

std::string DeviceDescriptor::string_param(std::string_view key, std::string_view fallback) const {
    auto it = params.find(key);
    if (it == params.end()) {
        return std::string(fallback);
    }
    if (!it->is_string()) {
        throw ConfigError("device '" + name + "': parameter '" + std::string(key) +
                          "' must be a string");
    }
    return it->get<std::string>();
}

void validate_params(const DeviceDescriptor &descriptor) {
    if (!descriptor.params.is_object()) {
        throw ConfigError("device '" + descriptor.name + "': params must be an object");
    }
    auto allowed = allowed_params(descriptor.kind);
    for (const auto &[key, value] : descriptor.params.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            std::string msg = "device '" + descriptor.name + "': unknown parameter '" + key +
                              "' for kind " + std::string(to_string(descriptor.kind));
            if (allowed.empty()) {
                msg += " (no parameters accepted)";
            } else {
                msg += " (allowed:";
                for (auto a : allowed) {
                    msg += " " + std::string(a);
                }
                msg += ")";
            }
            throw ConfigError(msg);
        }
        if (is_delay_key(key) && descriptor.int_param(key, 0) < 0) {
            throw ConfigError("device '" + descriptor.name + "': " + key + " must be >= 0");
        }
    }
    if (descriptor.kind == DeviceKind::Adc) {
        auto channels = descriptor.int_param("channels", 1);
        if (channels < 1 || channels > kMaxAdcChannels) {
            throw ConfigError("device '" + descriptor.name + "': channels must be in [1, " +
                              std::to_string(kMaxAdcChannels) + "]");
        }
    }
    if (descriptor.kind == DeviceKind::EdgeCounter) {
        auto mode = descriptor.string_param("counter_mode", "deterministic");
        if (mode != "deterministic" && mode != "poisson") {
            throw ConfigError("device '" + descriptor.name + "': counter_mode must be " +
                              "'deterministic' or 'poisson', got '" + mode + "'");
        }
    }
}

Driver::Driver(DeviceDescriptor descriptor, TimeManager &time, SignalManager &signals)
    : time_(time), signals_(signals), descriptor_(std::move(descriptor)) {
    validate_params(descriptor_);
}

SignalId Driver::add_signal(std::string_view signal, ValueKind kind, SignalClass cls) {
    return signals_.register_signal(name(), signal, kind, cls);
}

void Driver::emit(SignalId id, SignalValue value) {
    signals_.push(id, std::move(value), time_.now_mu());
}

double Driver::input_at_cursor(SignalId id) const {
    SignalValue value = signals_.pull(id, time_.now_mu());
    if (value.is_unknown()) {
        throw DeviceError("input signal " + signals_.signal(id).qualified_name() +
                          " is not set at t = " + std::to_string(time_.now_mu()) + " MU");
    }
    return value.as_real();
}

TimeMu Driver::delay_param(std::string_view key, TimeMu fallback) const {
    return descriptor_.int_param(key, fallback);
}

// core

CoreDriver::CoreDriver(DeviceDescriptor descriptor, TimeManager &time, SignalManager &signals)
    : Driver(std::move(descriptor), time, signals),
      kernel_(add_signal("kernel", ValueKind::Text)) {}

void CoreDriver::reset() { time_.sync_to_counter(); }

void CoreDriver::break_realtime() { time_.sync_to_counter(); }

TimeMu CoreDriver::seconds_to_mu(double seconds) const { return time_.seconds_to_mu(seconds); }

double CoreDriver::mu_to_seconds(TimeMu mu) const {
    return static_cast<double>(mu) * time_.config().ref_period_s;
}

void CoreDriver::mark_kernel(std::string_view kernel_name) {
    emit(kernel_, std::string(kernel_name.substr(0, kMaxTextBytes)));
}

// ttl_out

TtlOut::TtlOut(DeviceDescriptor descriptor, TimeManager &time, SignalManager &signals)
    : Driver(std::move(descriptor), time, signals), state_(add_signal("state", ValueKind::Bool)) {}

void TtlOut::on() { emit(state_, true); }

void TtlOut::off() { emit(state_, false); }

void TtlOut::set_o(bool level) { emit(state_, level); }

void TtlOut::pulse_mu(TimeMu duration) {
    if (duration <= 0) {
        throw DeviceError(name() + ".pulse: duration must be positive, got " +
                          std::to_string(duration) + " MU");
    }
    on();
    time_.delay_mu(duration);
    off();
}

void TtlOut::pulse(double seconds) { pulse_mu(time_.seconds_to_mu(seconds)); }

// ttl_in

TtlIn::TtlIn(DeviceDescriptor descriptor, TimeManager &time, SignalManager &signals)
    : Driver(std::move(descriptor), time, signals),
      probability_(add_signal("input_prob", ValueKind::Real, SignalClass::Input)),
      sample_delay_mu_(delay_param("sample_delay_mu", timing::kSampleDelayMu)),
      rng_(time.config().seed, name()),
      buffer_(name()) {}

void TtlIn::sample_input() {
    double p = input_at_cursor(probability_);
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DeviceError(name() + ": input probability " + std::to_string(p) +
                          " is outside [0, 1]");
    }
    buffer_.push(rng_.bernoulli(p));
    time_.delay_mu(sample_delay_mu_);
}

std::int64_t TtlIn::sample_get() { return buffer_.pop(); }

// edge_counter

EdgeCounter::EdgeCounter(DeviceDescriptor descriptor, TimeManager &time, SignalManager &signals)
    : Driver(std::move(descriptor), time, signals),
      gate_(add_signal("gate", ValueKind::Bool)),
      frequency_(add_signal("input_freq", ValueKind::Real, SignalClass::Input)),
      mode_(this->descriptor().string_param("counter_mode", "deterministic") == "poisson"
                ? CounterMode::Poisson
                : CounterMode::Deterministic),
      rng_(time.config().seed, name()),
      buffer_(name()) {}

TimeMu EdgeCounter::gate_rising_mu(TimeMu duration) {
    if (duration <= 0) {
        throw DeviceError(name() + ".gate_rising: duration must be positive, got " +
                          std::to_string(duration) + " MU");
    }
    double frequency = input_at_cursor(frequency_);
    if (!(frequency >= 0.0) || !std::isfinite(frequency)) {
        throw DeviceError(name() + ": input frequency " + std::to_string(frequency) +
                          " Hz must be finite and non-negative");
    }
    double mean = frequency * static_cast<double>(duration) * time_.config().ref_period_s;
    std::int64_t count = 0;
    if (mode_ == CounterMode::Deterministic) {
        count = std::llround(mean);
    } else {
        count = rng_.poisson(mean);
    }
    emit(gate_, true);
    time_.delay_mu(duration);
    emit(gate_, false);
    buffer_.push(count);
    return time_.now_mu();
}

TimeMu EdgeCounter::gate_rising(double seconds) {
    return gate_rising_mu(time_.seconds_to_mu(seconds));
}

std::int64_t EdgeCounter::fetch_count() { return buffer_.pop(); }

// dds

Dds::Dds(DeviceDescriptor descriptor, TimeManager &time, SignalManager &signals)
    : Driver(std::move(descriptor), time, signals),
      initialized_(add_signal("init", ValueKind::Bool)),
      frequency_(add_signal("freq", ValueKind::Real)),
      phase_(add_signal("phase", ValueKind::Real)),
      amplitude_(add_signal("amp", ValueKind::Real)),
      init_delay_mu_(delay_param("init_delay_mu", timing::kDdsInitDelayMu)),
      set_delay_mu_(delay_param("set_delay_mu", timing::kDdsSetDelayMu)) {}

void Dds::init() {
    emit(initialized_, true);
    time_.delay_mu(init_delay_mu_);
}

void Dds::set(double frequency_hz, double phase_turns, double amplitude) {
    if (!(frequency_hz >= 0.0) || !std::isfinite(frequency_hz)) {
        throw DeviceError(name() + ".set: frequency must be finite and >= 0");
    }
    if (!(phase_turns >= 0.0 && phase_turns < 1.0)) {
        throw DeviceError(name() + ".set: phase must be in [0, 1) turns");
    }
    if (!(amplitude >= 0.0 && amplitude <= 1.0)) {
        throw DeviceError(name() + ".set: amplitude must be in [0, 1]");
    }
    emit(frequency_, frequency_hz);
    emit(phase_, phase_turns);
    emit(amplitude_, amplitude);
    time_.delay_mu(set_delay_mu_);
}

// adc

Adc::Adc(DeviceDescriptor descriptor, TimeManager &time, SignalManager &signals)
    : Driver(std::move(descriptor), time, signals),
      sample_delay_mu_(delay_param("sample_delay_mu", timing::kSampleDelayMu)),
      buffer_(name()) {
    auto channels = this->descriptor().int_param("channels", 1);
    for (std::int64_t ch = 0; ch < channels; ++ch) {
        voltages_.push_back(
            add_signal("input_v" + std::to_string(ch), ValueKind::Real, SignalClass::Input));
    }
}

SignalId Adc::voltage_signal(std::size_t channel) const {
    if (channel >= voltages_.size()) {
        throw DeviceError(name() + ": no channel " + std::to_string(channel));
    }
    return voltages_[channel];
}

void Adc::sample_input() {
    std::vector<double> sample;
    sample.reserve(voltages_.size());
    for (SignalId id : voltages_) {
        sample.push_back(input_at_cursor(id));
    }
    buffer_.push(std::move(sample));
    time_.delay_mu(sample_delay_mu_);
}

std::vector<double> Adc::read() { return buffer_.pop(); }

std::vector<double> Adc::sample() {
    sample_input();
    return read();
}

std::unique_ptr<Driver> make_driver(const DeviceDescriptor &descriptor, TimeManager &time,
                                    SignalManager &signals) {
    switch (descriptor.kind) {
    case DeviceKind::Core:
        return std::make_unique<CoreDriver>(descriptor, time, signals);
    case DeviceKind::TtlOut:
        return std::make_unique<TtlOut>(descriptor, time, signals);
    case DeviceKind::TtlIn:
        return std::make_unique<TtlIn>(descriptor, time, signals);
    case DeviceKind::EdgeCounter:
        return std::make_unique<EdgeCounter>(descriptor, time, signals);
    case DeviceKind::Dds:
        return std::make_unique<Dds>(descriptor, time, signals);
    case DeviceKind::Adc:
        return std::make_unique<Adc>(descriptor, time, signals);
    }
    throw DeviceError("unsupported device kind");
}

}  // namespace rtsim
