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

#include "rtsim/timeline.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <string>

#include "rtsim/errors.hpp"

namespace rtsim {

ContextGuard::ContextGuard(TimeManager &time) : time_(&time), depth_(time.depth()) {}

ContextGuard::ContextGuard(ContextGuard &&other) noexcept
    : time_(other.time_), depth_(other.depth_) {
    other.time_ = nullptr;
}

ContextGuard::~ContextGuard() noexcept(false) {
    if (time_ == nullptr) {
        return;
    }
    if (std::uncaught_exceptions() > 0) {
        try {
            close();
        } catch (...) {
            // the in-flight exception wins
        }
        return;
    }
    close();
}

void ContextGuard::close() {
    if (time_ == nullptr) {
        return;
    }
    TimeManager *time = time_;
    time_ = nullptr;
    // Frames pushed inside the scope and never closed are unwound too.
    while (time->depth() > depth_) {
        time->pop_context();
    }
    if (time->depth() == depth_) {
        time->pop_context();
    }
}

TimeManager::TimeManager(const SimConfig &config) : config_(config) {
    config_.validate();
    stack_.push_back(SimulationContext{ContextKind::Sequential, 0, 0, 0});
}

void TimeManager::apply_delay(SimulationContext &frame, TimeMu duration, const char *op) {
    if (frame.kind == ContextKind::Sequential) {
        TimeMu current = checked::add(frame.t_current, duration, op);
        TimeMu total = checked::add(frame.t_duration, duration, op);
        frame.t_current = current;
        frame.t_duration = total;
    } else {
        frame.t_duration = std::max(frame.t_duration, duration);
    }
}

void TimeManager::note_cursor() { horizon_ = std::max(horizon_, now_mu()); }

void TimeManager::delay_mu(TimeMu duration) {
    apply_delay(stack_.back(), duration, "delay_mu");
    note_cursor();
}

TimeMu TimeManager::seconds_to_mu(double seconds) const {
    if (!std::isfinite(seconds)) {
        throw Error("delay(): duration must be finite");
    }
    double mu = std::round(seconds / config_.ref_period_s);
    // 2^63 is exactly representable; anything at or beyond it does not fit.
    constexpr double kLimit = 9223372036854775808.0;
    if (!(mu < kLimit) || !(mu >= -kLimit)) {
        throw OverflowError("time overflow in delay: " + std::to_string(seconds) +
                            " s does not fit in 64-bit machine units");
    }
    return static_cast<TimeMu>(mu);
}

void TimeManager::delay(double seconds) { delay_mu(seconds_to_mu(seconds)); }

void TimeManager::at_mu(TimeMu t_new) {
    SimulationContext &frame = stack_.back();
    TimeMu reference = frame.kind == ContextKind::Sequential ? frame.t_current : frame.t_start;
    apply_delay(frame, checked::sub(t_new, reference, "at_mu"), "at_mu");
    note_cursor();
}

void TimeManager::push_context(ContextKind kind) {
    TimeMu cursor = now_mu();
    stack_.push_back(SimulationContext{kind, cursor, cursor, 0});
}

void TimeManager::pop_context() {
    if (stack_.size() < 2) {
        throw ContextError("pop_context(): the root sequential context cannot be popped");
    }
    TimeMu duration = stack_.back().t_duration;
    stack_.pop_back();
    apply_delay(stack_.back(), duration, "pop_context");
    note_cursor();
}

ContextGuard TimeManager::sequential() {
    push_context(ContextKind::Sequential);
    return ContextGuard(*this);
}

ContextGuard TimeManager::parallel() {
    push_context(ContextKind::Parallel);
    return ContextGuard(*this);
}

TimeMu TimeManager::sync_to_counter() {
    at_mu(horizon_);
    delay_mu(config_.sync_slack_mu);
    ++sync_count_;
    if (!first_sync_cursor_) {
        first_sync_cursor_ = now_mu();
    }
    return now_mu();
}

void TimeManager::observe_event(TimeMu timestamp) { horizon_ = std::max(horizon_, timestamp); }

}  // namespace rtsim
