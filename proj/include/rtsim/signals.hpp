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
 * @file signals.hpp
 * @brief Typed, named signals and the signal manager that owns them.
 *
 * A signal is a piecewise-constant function of time stored as a
 * timestamp-sorted map of events. Pushing at an occupied timestamp replaces the
 * existing event. Pulling returns the value of the latest event at or before
 * the query time, or Unknown when the signal was never set up to that point.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "rtsim/config.hpp"

namespace rtsim {

enum class ValueKind { Unknown, Bool, Int, Real, Text };

std::string_view to_string(ValueKind kind);
/// Inverse of to_string(ValueKind); throws SignalError for unrecognized names.
ValueKind parse_value_kind(std::string_view text);

/// Longest Text value a signal accepts, in bytes.
inline constexpr std::size_t kMaxTextBytes = 64;

class SignalValue {
  public:
    SignalValue() = default;
    SignalValue(bool value) : data_(value) {}
    SignalValue(std::int64_t value) : data_(value) {}
    SignalValue(int value) : data_(std::int64_t{value}) {}
    SignalValue(double value) : data_(value) {}
    SignalValue(std::string value) : data_(std::move(value)) {}
    SignalValue(const char *value) : data_(std::string(value)) {}

    static SignalValue unknown() { return {}; }

    [[nodiscard]] ValueKind kind() const;
    [[nodiscard]] bool is_unknown() const { return kind() == ValueKind::Unknown; }

    // Typed accessors throw SignalError on a kind mismatch.
    [[nodiscard]] bool as_bool() const;
    [[nodiscard]] std::int64_t as_int() const;
    [[nodiscard]] double as_real() const;
    [[nodiscard]] const std::string &as_text() const;

    /// Canonical text form: true/false, decimal, 17 significant digits, raw
    /// text, or "unknown".
    [[nodiscard]] std::string render() const;
    /// Parses the output of render() for a value of kind \p kind.
    static SignalValue parse(ValueKind kind, std::string_view text);

    friend bool operator==(const SignalValue &, const SignalValue &) = default;

  private:
    std::variant<std::monostate, bool, std::int64_t, double, std::string> data_;
};

/// Input signals describe stimuli a test configures; outputs are driven by drivers.
enum class SignalClass { Output, Input };

/// Opaque handle to a registered signal. Valid for the lifetime of its manager.
struct SignalId {
    std::uint32_t index = 0;
    friend bool operator==(SignalId, SignalId) = default;
};

struct Event {
    TimeMu time = 0;
    SignalValue value;
    friend bool operator==(const Event &, const Event &) = default;
};

class Signal {
  public:
    Signal(SignalId id, std::string device, std::string name, ValueKind kind, SignalClass cls);

    [[nodiscard]] SignalId id() const { return id_; }
    [[nodiscard]] const std::string &device() const { return device_; }
    [[nodiscard]] const std::string &name() const { return name_; }
    [[nodiscard]] ValueKind kind() const { return kind_; }
    [[nodiscard]] SignalClass signal_class() const { return class_; }
    [[nodiscard]] const std::map<TimeMu, SignalValue> &events() const { return events_; }
    [[nodiscard]] std::size_t size() const { return events_.size(); }

    [[nodiscard]] SignalValue pull(TimeMu time) const;
    [[nodiscard]] std::vector<Event> events_in(TimeMu t0, TimeMu t1) const;

    /// Latest event timestamp <= time and earliest > time, when they exist.
    [[nodiscard]] std::pair<std::optional<TimeMu>, std::optional<TimeMu>> neighbours(
        TimeMu time) const;

    /// "device.name"
    [[nodiscard]] std::string qualified_name() const { return device_ + "." + name_; }

  private:
    friend class SignalManager;

    SignalId id_;
    std::string device_;
    std::string name_;
    ValueKind kind_;
    SignalClass class_;
    std::map<TimeMu, SignalValue> events_;
};

class SignalManager {
  public:
    using EventListener = std::function<void(TimeMu)>;

    explicit SignalManager(EventListener on_event = {});

    SignalId register_signal(std::string_view device, std::string_view name, ValueKind kind,
                             SignalClass cls = SignalClass::Output);

    void push(SignalId id, SignalValue value, TimeMu time);
    [[nodiscard]] SignalValue pull(SignalId id, TimeMu time) const;
    /// Events with t0 <= t <= t1, ascending. Throws SignalError if t0 > t1.
    [[nodiscard]] std::vector<Event> events_in(SignalId id, TimeMu t0, TimeMu t1) const;

    [[nodiscard]] const Signal &signal(SignalId id) const;
    [[nodiscard]] std::optional<SignalId> find(std::string_view device,
                                               std::string_view name) const;
    /// Like find(), but throws SignalError naming the missing signal.
    [[nodiscard]] SignalId lookup(std::string_view device, std::string_view name) const;

    /// All signals in registration order.
    [[nodiscard]] const std::vector<Signal> &list() const { return signals_; }

    [[nodiscard]] std::optional<TimeMu> max_event_time() const { return max_event_time_; }
    [[nodiscard]] std::size_t event_count() const;

  private:
    Signal &mutable_signal(SignalId id);

    EventListener on_event_;
    std::vector<Signal> signals_;
    std::map<std::pair<std::string, std::string>, SignalId> registry_;
    std::optional<TimeMu> max_event_time_;
};

}  // namespace rtsim
