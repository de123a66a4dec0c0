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
 * @file trace.hpp
 * @brief Event timeline export: VCD waveforms and JSON-lines dumps.
 *
 * JSONL layout, one object per line:
 * \code
 * {"t":100,"device":"ttl0","signal":"state","kind":"bool","value":"true"}
 * ...
 * {"summary":{"experiment":...,"event_count":...,"sync_count":...,
 *             "start_cursor_mu":...,"final_cursor_mu":...,"timeline_length_mu":...,
 *             "failed":...,"error":...,"config":{...}}}
 * \endcode
 * Records are sorted by (t, device, signal). Values use SignalValue::render().
 * Wall-clock time is not exported so that dumps of identical runs are
 * byte-identical.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "rtsim/environment.hpp"

namespace rtsim::trace {

struct TraceRecord {
    TimeMu time_mu = 0;
    std::string device;
    std::string signal;
    ValueKind kind = ValueKind::Unknown;
    std::string value;

    friend bool operator==(const TraceRecord &, const TraceRecord &) = default;
};

/// Every surviving event of the run, globally sorted.
std::vector<TraceRecord> collect_records(const SimulationRun &run);

nlohmann::ordered_json summary_json(const SimulationRun &run);

void write_jsonl(const SimulationRun &run, std::ostream &out);
/// Throws Error on I/O failure.
void export_jsonl(const SimulationRun &run, const std::string &path);

struct TraceFile {
    std::vector<TraceRecord> records;
    nlohmann::json summary;
};

/// Throws Error on malformed input.
TraceFile read_jsonl(std::istream &in);
TraceFile load_jsonl(const std::string &path);

void write_vcd(const SimulationRun &run, std::ostream &out);
void export_vcd(const SimulationRun &run, const std::string &path);

/// VCD identifier code for the n-th declared variable (printable ASCII, base 94).
std::string vcd_identifier(std::size_t index);

}  // namespace rtsim::trace
