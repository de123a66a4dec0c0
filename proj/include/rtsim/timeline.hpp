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
 * @file timeline.hpp
 * @brief Timeline cursor simulation through a stack of timing contexts.
 *
 * Every kernel starts in a sequential context rooted at t = 0. Entering a
 * sequential or parallel scope pushes a new frame that inherits the cursor of
 * its parent with a zero duration; leaving the scope pops the frame and applies
 * its duration to the parent as an ordinary delay.
 *
 * - Sequential frames move the cursor with every delay and accumulate the
 *   signed sum of the delays as their duration.
 * - Parallel frames never move their cursor; their duration is the largest
 *   delay seen, and never drops below zero.
 *
 * Parallel semantics propagate into nested frames (deep parallel): a parallel
 * frame nested in a parallel frame still contributes only its maximum.
 *
 * The timeline horizon estimates the RTIO counter. It is the running maximum
 * of every cursor position and every event timestamp observed so far, so it
 * never moves backwards even when negative delays pull the cursor back.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rtsim/config.hpp"

namespace rtsim {

enum class ContextKind { Sequential, Parallel };

struct SimulationContext {
    ContextKind kind = ContextKind::Sequential;
    TimeMu t_start = 0;
    TimeMu t_current = 0;
    TimeMu t_duration = 0;
};

class TimeManager;

/// Pops the frame it was created for when it goes out of scope.
class [[nodiscard]] ContextGuard {
  public:
    explicit ContextGuard(TimeManager &time);
    ContextGuard(const ContextGuard &) = delete;
    ContextGuard &operator=(const ContextGuard &) = delete;
    ContextGuard(ContextGuard &&other) noexcept;
    ContextGuard &operator=(ContextGuard &&) = delete;
    // Propagates pop errors unless the scope is already unwinding.
    ~ContextGuard() noexcept(false);

    /// Pops the frame now. Idempotent.
    void close();

  private:
    TimeManager *time_;
    std::size_t depth_;
};

class TimeManager {
  public:
    explicit TimeManager(const SimConfig &config = {});

    [[nodiscard]] TimeMu now_mu() const { return stack_.back().t_current; }

    void delay_mu(TimeMu duration);
    /// Delay in seconds, rounded half away from zero to whole machine units.
    void delay(double seconds);
    void at_mu(TimeMu t_new);

    void push_context(ContextKind kind);
    /// Throws ContextError on the root frame.
    void pop_context();

    /// Scoped helpers: the returned guard pops the frame on destruction.
    ContextGuard sequential();
    ContextGuard parallel();

    template <class Body>
    void sequential(Body &&body) {
        ContextGuard guard = sequential();
        body();
        guard.close();
    }

    template <class Body>
    void parallel(Body &&body) {
        ContextGuard guard = parallel();
        body();
        guard.close();
    }

    /// Moves the cursor to the horizon and inserts the configured slack.
    /// Returns the cursor afterwards.
    TimeMu sync_to_counter();

    [[nodiscard]] TimeMu horizon() const { return horizon_; }

    /// Feeds an event timestamp into the horizon.
    void observe_event(TimeMu timestamp);

    [[nodiscard]] std::size_t depth() const { return stack_.size(); }
    [[nodiscard]] const SimulationContext &top() const { return stack_.back(); }
    [[nodiscard]] const std::vector<SimulationContext> &frames() const { return stack_; }

    [[nodiscard]] std::uint64_t sync_count() const { return sync_count_; }
    /// Cursor right after the first synchronization, if one happened.
    [[nodiscard]] std::optional<TimeMu> first_sync_cursor() const { return first_sync_cursor_; }

    [[nodiscard]] const SimConfig &config() const { return config_; }

    /// Converts seconds to machine units using the configured reference period.
    [[nodiscard]] TimeMu seconds_to_mu(double seconds) const;

  private:
    void apply_delay(SimulationContext &frame, TimeMu duration, const char *op);
    void note_cursor();

    SimConfig config_;
    std::vector<SimulationContext> stack_;
    TimeMu horizon_ = 0;
    std::uint64_t sync_count_ = 0;
    std::optional<TimeMu> first_sync_cursor_;
};

}  // namespace rtsim
