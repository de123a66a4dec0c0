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

#include "rtsim/trace.hpp"

#include <algorithm>
#include <bitset>
#include <fstream>
#include <istream>
#include <ostream>
#include <tuple>

namespace rtsim::trace {

std::vector<TraceRecord> collect_records(const SimulationRun &run) {
    std::vector<TraceRecord> records;
    records.reserve(run.signals().event_count());
    for (const Signal &sig : run.signals().list()) {
        for (const auto &[t, value] : sig.events()) {
            records.push_back(TraceRecord{t, sig.device(), sig.name(), sig.kind(), value.render()});
        }
    }
    std::stable_sort(records.begin(), records.end(), [](const auto &a, const auto &b) {
        return std::tie(a.time_mu, a.device, a.signal) < std::tie(b.time_mu, b.device, b.signal);
    });
    return records;
}

nlohmann::ordered_json summary_json(const SimulationRun &run) {
    RunStats stats = run.stats();
    const SimConfig &config = run.config();
    nlohmann::ordered_json summary;
    summary["experiment"] = run.experiment_name();
    summary["event_count"] = stats.event_count;
    summary["sync_count"] = stats.sync_count;
    summary["start_cursor_mu"] = stats.start_cursor();
    summary["final_cursor_mu"] = stats.final_cursor;
    summary["timeline_length_mu"] = stats.timeline_length();
    summary["failed"] = run.failed();
    summary["error"] = run.error() ? nlohmann::ordered_json(*run.error()) : nullptr;
    summary["config"] = {{"mode", to_string(config.mode)},
                         {"sync_slack_mu", config.sync_slack_mu},
                         {"ref_period_s", config.ref_period_s},
                         {"seed", config.seed}};
    return summary;
}

void write_jsonl(const SimulationRun &run, std::ostream &out) {
    for (const TraceRecord &record : collect_records(run)) {
        nlohmann::ordered_json line;
        line["t"] = record.time_mu;
        line["device"] = record.device;
        line["signal"] = record.signal;
        line["kind"] = to_string(record.kind);
        line["value"] = record.value;
        out << line.dump() << '\n';
    }
    nlohmann::ordered_json last;
    last["summary"] = summary_json(run);
    out << last.dump() << '\n';
}

namespace {

std::ofstream open_output(const std::string &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open '" + path + "' for writing");
    }
    return out;
}

void finish_output(std::ofstream &out, const std::string &path) {
    out.flush();
    if (!out) {
        throw Error("failed writing '" + path + "'");
    }
}

}  // namespace

void export_jsonl(const SimulationRun &run, const std::string &path) {
    auto out = open_output(path);
    write_jsonl(run, out);
    finish_output(out, path);
}

TraceFile read_jsonl(std::istream &in) {
    TraceFile file;
    std::string line;
    std::size_t line_no = 0;
    bool have_summary = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const std::string where = "line " + std::to_string(line_no);
        if (have_summary) {
            throw Error(where + ": content after the summary record");
        }
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error &err) {
            throw Error(where + ": " + err.what());
        }
        if (doc.contains("summary")) {
            file.summary = doc["summary"];
            have_summary = true;
            continue;
        }
        try {
            TraceRecord record;
            record.time_mu = doc.at("t").get<TimeMu>();
            record.device = doc.at("device").get<std::string>();
            record.signal = doc.at("signal").get<std::string>();
            record.kind = parse_value_kind(doc.at("kind").get<std::string>());
            record.value = doc.at("value").get<std::string>();
            file.records.push_back(std::move(record));
        } catch (const nlohmann::json::exception &err) {
            throw Error(where + ": malformed record: " + err.what());
        } catch (const SignalError &err) {
            throw Error(where + ": " + err.what());
        }
    }
    if (!have_summary) {
        throw Error("trace has no summary record");
    }
    return file;
}

TraceFile load_jsonl(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    try {
        return read_jsonl(in);
    } catch (const Error &err) {
        throw Error(path + ": " + err.what());
    }
}

// VCD

std::string vcd_identifier(std::size_t index) {
    constexpr std::size_t kFirst = 33;  // '!'
    constexpr std::size_t kRadix = 94;  // '!'..'~'
    std::string id;
    do {
        id.push_back(static_cast<char>(kFirst + index % kRadix));
        index /= kRadix;
    } while (index-- > 0);
    return id;
}

namespace {

/// VCD tokens are whitespace separated; anything else is kept verbatim.
std::string vcd_token(std::string_view text) {
    if (text.empty()) {
        return "_";
    }
    std::string out(text);
    for (char &c : out) {
        auto u = static_cast<unsigned char>(c);
        if (u <= 32 || u >= 127) {
            c = '_';
        }
    }
    return out;
}

std::string vcd_value(const SignalValue &value, const std::string &id) {
    switch (value.kind()) {
    case ValueKind::Bool:
        return (value.as_bool() ? "1" : "0") + id;
    case ValueKind::Int: {
        std::string bits = std::bitset<64>(static_cast<std::uint64_t>(value.as_int())).to_string();
        auto first_one = bits.find('1');
        bits = first_one == std::string::npos ? "0" : bits.substr(first_one);
        return "b" + bits + " " + id;
    }
    case ValueKind::Real:
        return "r" + value.render() + " " + id;
    case ValueKind::Text:
        return "s" + vcd_token(value.as_text()) + " " + id;
    case ValueKind::Unknown:
        break;
    }
    return "x" + id;
}

std::string vcd_declaration(const Signal &sig, const std::string &id) {
    std::string type;
    switch (sig.kind()) {
    case ValueKind::Bool:
        type = "wire 1";
        break;
    case ValueKind::Int:
        type = "reg 64";
        break;
    case ValueKind::Real:
        type = "real 64";
        break;
    case ValueKind::Text:
    case ValueKind::Unknown:
        type = "string 1";
        break;
    }
    return "$var " + type + " " + id + " " + vcd_token(sig.name()) + " $end";
}

}  // namespace

void write_vcd(const SimulationRun &run, std::ostream &out) {
    const auto &signals = run.signals().list();

    out << "$version rtsim $end\n";
    out << "$timescale 1 ns $end\n";

    // One scope per device, in order of first registration.
    std::vector<std::string> devices;
    for (const Signal &sig : signals) {
        if (std::find(devices.begin(), devices.end(), sig.device()) == devices.end()) {
            devices.push_back(sig.device());
        }
    }
    for (const std::string &device : devices) {
        out << "$scope module " << vcd_token(device) << " $end\n";
        for (const Signal &sig : signals) {
            if (sig.device() == device) {
                out << vcd_declaration(sig, vcd_identifier(sig.id().index)) << "\n";
            }
        }
        out << "$upscope $end\n";
    }
    out << "$enddefinitions $end\n";

    struct Change {
        TimeMu time;
        const Signal *signal;
        const SignalValue *value;
    };
    std::vector<Change> initial;
    std::vector<Change> changes;
    for (const Signal &sig : signals) {
        const auto &events = sig.events();
        auto first_positive = events.upper_bound(0);
        if (first_positive != events.begin()) {
            // Events at or before t = 0 collapse into the value at t = 0.
            initial.push_back(Change{0, &sig, &std::prev(first_positive)->second});
        }
        for (auto it = first_positive; it != events.end(); ++it) {
            changes.push_back(Change{it->first, &sig, &it->second});
        }
    }
    auto order = [](const Change &a, const Change &b) {
        return std::tie(a.time, a.signal->device(), a.signal->name()) <
               std::tie(b.time, b.signal->device(), b.signal->name());
    };
    std::sort(initial.begin(), initial.end(), order);
    std::sort(changes.begin(), changes.end(), order);

    if (!initial.empty()) {
        out << "#0\n$dumpvars\n";
        for (const Change &c : initial) {
            out << vcd_value(*c.value, vcd_identifier(c.signal->id().index)) << "\n";
        }
        out << "$end\n";
    }
    std::optional<TimeMu> current;
    for (const Change &c : changes) {
        if (current != c.time) {
            out << "#" << c.time << "\n";
            current = c.time;
        }
        out << vcd_value(*c.value, vcd_identifier(c.signal->id().index)) << "\n";
    }
}

void export_vcd(const SimulationRun &run, const std::string &path) {
    auto out = open_output(path);
    write_vcd(run, out);
    finish_output(out, path);
}

}  // namespace rtsim::trace
