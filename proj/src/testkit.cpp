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

#include "rtsim/testkit.hpp"

#include <cmath>
#include <sstream>

namespace rtsim::testkit {

namespace {

bool values_match(const SignalValue &expected, const SignalValue &actual, double tolerance) {
    if (expected.kind() == ValueKind::Real && actual.kind() == ValueKind::Real) {
        double diff = std::fabs(expected.as_real() - actual.as_real());
        return expected == actual || diff <= tolerance;
    }
    return expected == actual;
}

std::string describe(const SignalValue &value) {
    return value.is_unknown() ? "unknown"
                              : std::string(to_string(value.kind())) + " " + value.render();
}

std::string describe(const std::optional<TimeMu> &t) {
    return t ? std::to_string(*t) : std::string("none");
}

}  // namespace

void set_input(SimulationRun &run, std::string_view device, std::string_view signal, TimeMu time,
               SignalValue value) {
    run.device(device);
    SignalId id = run.signals().lookup(device, signal);
    if (run.signals().signal(id).signal_class() != SignalClass::Input) {
        throw SignalError("set_input: " + run.signals().signal(id).qualified_name() +
                          " is an output signal");
    }
    run.signals().push(id, std::move(value), time);
}

ExpectReport expect(const SimulationRun &run, std::string_view device, std::string_view signal,
                    TimeMu time, const SignalValue &expected, double tolerance) {
    const Signal &sig = run.signals().signal(run.signals().lookup(device, signal));
    ExpectReport report;
    report.device = device;
    report.signal = signal;
    report.time = time;
    report.expected = expected;
    report.actual = sig.pull(time);
    report.tolerance = tolerance;
    std::tie(report.previous_event, report.next_event) = sig.neighbours(time);
    report.passed = values_match(expected, report.actual, tolerance);
    return report;
}

ExpectReport expect(const SimulationRun &run, const Expectation &expectation, double tolerance) {
    return expect(run, expectation.device, expectation.signal, expectation.time,
                  expectation.expected, tolerance);
}

EventsReport assert_events(const SimulationRun &run, std::string_view device,
                           std::string_view signal, const std::vector<Event> &expected,
                           double tolerance) {
    const Signal &sig = run.signals().signal(run.signals().lookup(device, signal));
    EventsReport report;
    report.device = device;
    report.signal = signal;
    report.expected = expected;
    for (const auto &[t, v] : sig.events()) {
        report.actual.push_back(Event{t, v});
    }
    const std::size_t common = std::min(expected.size(), report.actual.size());
    for (std::size_t i = 0; i < common; ++i) {
        const Event &want = expected[i];
        const Event &got = report.actual[i];
        if (want.time != got.time || !values_match(want.value, got.value, tolerance)) {
            report.first_divergence = i;
            break;
        }
    }
    if (!report.first_divergence && expected.size() != report.actual.size()) {
        report.first_divergence = common;
    }
    report.passed = !report.first_divergence.has_value();
    return report;
}

std::string render(const ExpectReport &report) {
    std::ostringstream out;
    out << (report.passed ? "PASS" : "FAIL") << " " << report.device << "." << report.signal
        << " @ " << report.time << " MU: expected " << describe(report.expected) << ", actual "
        << describe(report.actual);
    if (report.tolerance > 0.0) {
        out << " (tolerance " << report.tolerance << ")";
    }
    out << "; nearest events: previous " << describe(report.previous_event) << ", next "
        << describe(report.next_event);
    return out.str();
}

std::string render(const EventsReport &report) {
    std::ostringstream out;
    out << (report.passed ? "PASS" : "FAIL") << " " << report.device << "." << report.signal
        << ": expected " << report.expected.size() << " events, found " << report.actual.size();
    if (report.first_divergence) {
        std::size_t i = *report.first_divergence;
        out << "; first divergence at index " << i << ": expected ";
        if (i < report.expected.size()) {
            out << "(" << report.expected[i].time << ", " << describe(report.expected[i].value)
                << ")";
        } else {
            out << "no event";
        }
        out << ", actual ";
        if (i < report.actual.size()) {
            out << "(" << report.actual[i].time << ", " << describe(report.actual[i].value) << ")";
        } else {
            out << "no event";
        }
    }
    return out.str();
}

void require(const ExpectReport &report) {
    if (!report.passed) {
        throw AssertionError(render(report));
    }
}

void require(const EventsReport &report) {
    if (!report.passed) {
        throw AssertionError(render(report));
    }
}

}  // namespace rtsim::testkit
