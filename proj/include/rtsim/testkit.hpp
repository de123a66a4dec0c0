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
 * @file testkit.hpp
 * @brief Stimulus and assertion helpers for unit tests of simulated runs.
 *
 * Reports are plain data so that any test framework can consume them;
 * render() produces the human-readable form.
 */

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rtsim/environment.hpp"
#include "rtsim/signals.hpp"

namespace rtsim::testkit {

struct Expectation {
    std::string device;
    std::string signal;
    TimeMu time = 0;
    SignalValue expected;  // Unknown means "must be unset"
};

struct ExpectReport {
    bool passed = false;
    std::string device;
    std::string signal;
    TimeMu time = 0;
    SignalValue expected;
    SignalValue actual;
    double tolerance = 0.0;
    std::optional<TimeMu> previous_event;
    std::optional<TimeMu> next_event;
};

struct EventsReport {
    bool passed = false;
    std::string device;
    std::string signal;
    std::vector<Event> expected;
    std::vector<Event> actual;
    /// Index of the first position where the lists differ.
    std::optional<std::size_t> first_divergence;
};

/// Pushes \p value onto an input signal. Instantiates the device if needed.
/// Throws SignalError for unknown or output signals and kind mismatches.
void set_input(SimulationRun &run, std::string_view device, std::string_view signal, TimeMu time,
               SignalValue value);

/// Compares the signal value at \p time with \p expected. Reals compare within
/// an absolute \p tolerance.
ExpectReport expect(const SimulationRun &run, std::string_view device, std::string_view signal,
                    TimeMu time, const SignalValue &expected, double tolerance = 0.0);
ExpectReport expect(const SimulationRun &run, const Expectation &expectation,
                    double tolerance = 0.0);

/// The full event list of the signal must equal \p expected.
EventsReport assert_events(const SimulationRun &run, std::string_view device,
                           std::string_view signal, const std::vector<Event> &expected,
                           double tolerance = 0.0);

std::string render(const ExpectReport &report);
std::string render(const EventsReport &report);

/// Throws AssertionError carrying render(report) when the report failed.
void require(const ExpectReport &report);
void require(const EventsReport &report);

}  // namespace rtsim::testkit
