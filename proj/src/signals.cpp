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

#include "rtsim/signals.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <limits>

#include "rtsim/errors.hpp"

namespace rtsim {

std::string_view to_string(ValueKind kind) {
    switch (kind) {
    case ValueKind::Unknown:
        return "unknown";
    case ValueKind::Bool:
        return "bool";
    case ValueKind::Int:
        return "int";
    case ValueKind::Real:
        return "real";
    case ValueKind::Text:
        return "text";
    }
    return "unknown";
}

ValueKind parse_value_kind(std::string_view text) {
    for (ValueKind kind :
         {ValueKind::Unknown, ValueKind::Bool, ValueKind::Int, ValueKind::Real, ValueKind::Text}) {
        if (to_string(kind) == text) {
            return kind;
        }
    }
    throw SignalError("unknown value kind '" + std::string(text) + "'");
}

ValueKind SignalValue::kind() const {
    switch (data_.index()) {
    case 1:
        return ValueKind::Bool;
    case 2:
        return ValueKind::Int;
    case 3:
        return ValueKind::Real;
    case 4:
        return ValueKind::Text;
    default:
        return ValueKind::Unknown;
    }
}

namespace {

[[noreturn]] void kind_mismatch(ValueKind wanted, ValueKind actual) {
    throw SignalError("signal value is " + std::string(to_string(actual)) + ", not " +
                      std::string(to_string(wanted)));
}

}  // namespace

bool SignalValue::as_bool() const {
    if (const auto *v = std::get_if<bool>(&data_)) {
        return *v;
    }
    kind_mismatch(ValueKind::Bool, kind());
}

std::int64_t SignalValue::as_int() const {
    if (const auto *v = std::get_if<std::int64_t>(&data_)) {
        return *v;
    }
    kind_mismatch(ValueKind::Int, kind());
}

double SignalValue::as_real() const {
    if (const auto *v = std::get_if<double>(&data_)) {
        return *v;
    }
    kind_mismatch(ValueKind::Real, kind());
}

const std::string &SignalValue::as_text() const {
    if (const auto *v = std::get_if<std::string>(&data_)) {
        return *v;
    }
    kind_mismatch(ValueKind::Text, kind());
}

std::string SignalValue::render() const {
    switch (kind()) {
    case ValueKind::Bool:
        return as_bool() ? "true" : "false";
    case ValueKind::Int:
        return std::to_string(as_int());
    case ValueKind::Real: {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", as_real());
        return buf;
    }
    case ValueKind::Text:
        return as_text();
    case ValueKind::Unknown:
        break;
    }
    return "unknown";
}

SignalValue SignalValue::parse(ValueKind kind, std::string_view text) {
    auto bad = [&]() -> SignalError {
        return SignalError("cannot parse '" + std::string(text) + "' as " +
                           std::string(to_string(kind)));
    };
    switch (kind) {
    case ValueKind::Bool:
        if (text == "true") {
            return true;
        }
        if (text == "false") {
            return false;
        }
        throw bad();
    case ValueKind::Int: {
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
            throw bad();
        }
        return value;
    }
    case ValueKind::Real: {
        std::string copy(text);
        char *end = nullptr;
        double value = std::strtod(copy.c_str(), &end);
        if (copy.empty() || end != copy.c_str() + copy.size()) {
            throw bad();
        }
        return value;
    }
    case ValueKind::Text:
        return std::string(text);
    case ValueKind::Unknown:
        if (text == "unknown") {
            return {};
        }
        throw bad();
    }
    throw bad();
}

Signal::Signal(SignalId id, std::string device, std::string name, ValueKind kind, SignalClass cls)
    : id_(id), device_(std::move(device)), name_(std::move(name)), kind_(kind), class_(cls) {}

SignalValue Signal::pull(TimeMu time) const {
    auto it = events_.upper_bound(time);
    if (it == events_.begin()) {
        return {};
    }
    return std::prev(it)->second;
}

std::vector<Event> Signal::events_in(TimeMu t0, TimeMu t1) const {
    if (t0 > t1) {
        throw SignalError("events_in(" + qualified_name() + "): empty range [" +
                          std::to_string(t0) + ", " + std::to_string(t1) + "]");
    }
    std::vector<Event> out;
    for (auto it = events_.lower_bound(t0); it != events_.end() && it->first <= t1; ++it) {
        out.push_back(Event{it->first, it->second});
    }
    return out;
}

std::pair<std::optional<TimeMu>, std::optional<TimeMu>> Signal::neighbours(TimeMu time) const {
    std::pair<std::optional<TimeMu>, std::optional<TimeMu>> out;
    auto it = events_.upper_bound(time);
    if (it != events_.end()) {
        out.second = it->first;
    }
    if (it != events_.begin()) {
        out.first = std::prev(it)->first;
    }
    return out;
}

SignalManager::SignalManager(EventListener on_event) : on_event_(std::move(on_event)) {}

SignalId SignalManager::register_signal(std::string_view device, std::string_view name,
                                        ValueKind kind, SignalClass cls) {
    if (kind == ValueKind::Unknown) {
        throw SignalError("signal " + std::string(device) + "." + std::string(name) +
                          " cannot be registered with kind unknown");
    }
    auto key = std::make_pair(std::string(device), std::string(name));
    if (registry_.count(key) != 0) {
        throw SignalError("signal " + key.first + "." + key.second + " is already registered");
    }
    if (signals_.size() >= std::numeric_limits<std::uint32_t>::max()) {
        throw SignalError("too many signals");
    }
    SignalId id{static_cast<std::uint32_t>(signals_.size())};
    signals_.emplace_back(id, key.first, key.second, kind, cls);
    registry_.emplace(std::move(key), id);
    return id;
}

Signal &SignalManager::mutable_signal(SignalId id) {
    if (id.index >= signals_.size()) {
        throw SignalError("invalid signal handle " + std::to_string(id.index));
    }
    return signals_[id.index];
}

const Signal &SignalManager::signal(SignalId id) const {
    if (id.index >= signals_.size()) {
        throw SignalError("invalid signal handle " + std::to_string(id.index));
    }
    return signals_[id.index];
}

void SignalManager::push(SignalId id, SignalValue value, TimeMu time) {
    Signal &sig = mutable_signal(id);
    if (value.is_unknown()) {
        throw SignalError("cannot push unknown onto " + sig.qualified_name());
    }
    if (value.kind() != sig.kind()) {
        throw SignalError("cannot push " + std::string(to_string(value.kind())) + " onto " +
                          std::string(to_string(sig.kind())) + " signal " + sig.qualified_name());
    }
    if (value.kind() == ValueKind::Text && value.as_text().size() > kMaxTextBytes) {
        throw SignalError("text value for " + sig.qualified_name() + " exceeds " +
                          std::to_string(kMaxTextBytes) + " bytes");
    }
    sig.events_.insert_or_assign(time, std::move(value));
    if (!max_event_time_ || time > *max_event_time_) {
        max_event_time_ = time;
    }
    if (on_event_) {
        on_event_(time);
    }
}

SignalValue SignalManager::pull(SignalId id, TimeMu time) const { return signal(id).pull(time); }

std::vector<Event> SignalManager::events_in(SignalId id, TimeMu t0, TimeMu t1) const {
    return signal(id).events_in(t0, t1);
}

std::optional<SignalId> SignalManager::find(std::string_view device, std::string_view name) const {
    auto it = registry_.find(std::make_pair(std::string(device), std::string(name)));
    if (it == registry_.end()) {
        return std::nullopt;
    }
    return it->second;
}

SignalId SignalManager::lookup(std::string_view device, std::string_view name) const {
    if (auto id = find(device, name)) {
        return *id;
    }
    throw SignalError("unknown signal " + std::string(device) + "." + std::string(name));
}

std::size_t SignalManager::event_count() const {
    std::size_t total = 0;
    for (const Signal &sig : signals_) {
        total += sig.size();
    }
    return total;
}

}  // namespace rtsim
