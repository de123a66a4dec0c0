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

#include "rtsim/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "rtsim/errors.hpp"

namespace rtsim::bench {

void BenchScenario::validate() const {
    if (points < 1 || samples_per_point < 1) {
        throw ConfigError("scenario '" + name + "': points and samples must be >= 1");
    }
    if (ttl_pulses < 0 || dds_sets < 0 || ops_per_sample() < 1) {
        throw ConfigError("scenario '" + name + "': needs at least one operation per sample");
    }
    if (ttl_pulses > 0 && pulse_mu <= 0) {
        throw ConfigError("scenario '" + name + "': pulse duration must be positive");
    }
    if (delay_per_sample_mu < 0) {
        throw ConfigError("scenario '" + name + "': delay per sample must be >= 0");
    }
}

std::uint64_t expected_sync_count(const BenchScenario &scenario) {
    auto samples = static_cast<std::uint64_t>(scenario.total_samples());
    if (!scenario.buffered) {
        return 1 + samples;
    }
    constexpr auto batch = static_cast<std::uint64_t>(kBufferBatch);
    return 1 + (samples + batch - 1) / batch;
}

Experiment make_experiment(const BenchScenario &scenario) {
    scenario.validate();
    Experiment exp;
    exp.name = scenario.name;
    exp.metadata["points"] = std::to_string(scenario.points);
    exp.metadata["samples_per_point"] = std::to_string(scenario.samples_per_point);
    exp.metadata["buffered"] = scenario.buffered ? "true" : "false";
    exp.body = [scenario](Environment &env) {
        std::vector<TtlOut *> ttls;
        Dds *dds = nullptr;
        for (const auto &device : env.run().ddb().devices()) {
            if (device.kind == DeviceKind::TtlOut) {
                ttls.push_back(&env.get<TtlOut>(device.name));
            } else if (device.kind == DeviceKind::Dds && dds == nullptr) {
                dds = &env.get<Dds>(device.name);
            }
        }
        if (scenario.ttl_pulses > 0 && ttls.empty()) {
            throw DeviceError("scenario '" + scenario.name + "' needs a ttl_out device");
        }
        if (scenario.dds_sets > 0 && dds == nullptr) {
            throw DeviceError("scenario '" + scenario.name + "' needs a dds device");
        }

        env.kernel(scenario.name, [&] {
            CoreDriver &core = env.core();
            core.reset();
            std::int64_t sample_index = 0;
            const std::int64_t total = scenario.total_samples();
            for (std::int64_t point = 0; point < scenario.points; ++point) {
                const double frequency = 100e6 + 1e3 * static_cast<double>(point);
                for (std::int64_t sample = 0; sample < scenario.samples_per_point; ++sample) {
                    for (std::int64_t i = 0; i < scenario.dds_sets; ++i) {
                        dds->set(frequency, 0.0, 1.0);
                    }
                    for (std::int64_t i = 0; i < scenario.ttl_pulses; ++i) {
                        ttls[static_cast<std::size_t>(i) % ttls.size()]->pulse_mu(
                            scenario.pulse_mu);
                    }
                    env.delay_mu(scenario.delay_per_sample_mu);
                    ++sample_index;
                    if (!scenario.buffered || sample_index % kBufferBatch == 0 ||
                        sample_index == total) {
                        core.break_realtime();
                    }
                }
            }
        });
    };
    return exp;
}

double relative_error(double t_sim, double t_ref) {
    if (t_ref == 0.0) {
        throw Error("relative error is undefined for a zero reference length");
    }
    return (t_sim - t_ref) / t_ref;
}

BenchRow run_scenario(const BenchScenario &scenario, const DeviceDb &ddb, const SimConfig &config) {
    Experiment exp = make_experiment(scenario);
    SimulationRun run(ddb, config);
    run.execute(exp);
    if (run.failed()) {
        throw Error("scenario '" + scenario.name + "' failed: " + *run.error());
    }
    RunStats stats = run.stats();
    BenchRow row;
    row.scenario = scenario.name;
    row.mode = config.mode;
    row.timeline_length_mu = stats.timeline_length();
    row.start_cursor_mu = stats.start_cursor();
    row.final_cursor_mu = stats.final_cursor;
    row.event_count = stats.event_count;
    row.sync_count = stats.sync_count;
    row.wall_clock_ns = stats.wall_clock_ns;
    const double simulated_s = static_cast<double>(row.timeline_length_mu) * config.ref_period_s;
    const double wall_s = static_cast<double>(std::max<std::int64_t>(row.wall_clock_ns, 1)) * 1e-9;
    row.speedup_proxy = simulated_s / wall_s;
    return row;
}

BenchReport run_bench(const BenchScenario &scenario, const DeviceDb &ddb, std::uint64_t seed) {
    BenchReport report;
    report.regular = run_scenario(scenario, ddb, SimConfig::regular(seed));
    report.optimistic = run_scenario(scenario, ddb, SimConfig::optimistic(seed));
    return report;
}

std::vector<BenchScenario> bundled_scenarios() {
    BenchScenario scan;

    BenchScenario scan_buffered = scan;
    scan_buffered.name = "scan_buffered";
    scan_buffered.buffered = true;

    // Long delays, few events.
    BenchScenario delay_dominated;
    delay_dominated.name = "delay_dominated";
    delay_dominated.points = 5;
    delay_dominated.samples_per_point = 20;
    delay_dominated.ttl_pulses = 1;
    delay_dominated.dds_sets = 0;
    delay_dominated.delay_per_sample_mu = 1'000'000;

    // Dense events, near-zero delays.
    BenchScenario event_dominated;
    event_dominated.name = "event_dominated";
    event_dominated.points = 20;
    event_dominated.samples_per_point = 1000;
    event_dominated.pulse_mu = 10;
    event_dominated.delay_per_sample_mu = 0;
    event_dominated.buffered = true;

    return {scan, scan_buffered, delay_dominated, event_dominated};
}

const BenchScenario &bundled_scenario(std::string_view name) {
    static const std::vector<BenchScenario> scenarios = bundled_scenarios();
    for (const auto &scenario : scenarios) {
        if (scenario.name == name) {
            return scenario;
        }
    }
    std::string names;
    for (const auto &scenario : scenarios) {
        names += (names.empty() ? "" : ", ") + scenario.name;
    }
    throw Error("unknown scenario '" + std::string(name) + "' (available: " + names + ")");
}

std::map<std::string, TimeMu> read_reference_csv(std::istream &in) {
    std::map<std::string, TimeMu> out;
    std::string line;
    if (!std::getline(in, line) || line.rfind("scenario,t_exe_mu", 0) != 0) {
        throw Error("reference CSV must start with the header 'scenario,t_exe_mu'");
    }
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw Error("reference CSV line " + std::to_string(line_no) + ": expected 2 columns");
        }
        std::string name = line.substr(0, comma);
        std::string value = line.substr(comma + 1);
        std::size_t used = 0;
        TimeMu t = 0;
        try {
            t = std::stoll(value, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != value.size() || t <= 0) {
            throw Error("reference CSV line " + std::to_string(line_no) +
                        ": t_exe_mu must be a positive integer");
        }
        out[name] = t;
    }
    return out;
}

std::map<std::string, TimeMu> load_reference_csv(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open reference CSV '" + path + "'");
    }
    return read_reference_csv(in);
}

void apply_reference(std::vector<BenchRow> &rows, const std::map<std::string, TimeMu> &reference) {
    for (BenchRow &row : rows) {
        if (auto it = reference.find(row.scenario); it != reference.end()) {
            row.relative_error = relative_error(static_cast<double>(row.timeline_length_mu),
                                                static_cast<double>(it->second));
        }
    }
}

void write_csv(std::ostream &out, const std::vector<BenchRow> &rows, bool with_relative_error) {
    out << "scenario,config,timeline_length_mu,event_count,sync_count,wall_clock_ns,"
           "speedup_proxy";
    if (with_relative_error) {
        out << ",relative_error";
    }
    out << "\n";
    char buf[64];
    for (const BenchRow &row : rows) {
        std::snprintf(buf, sizeof buf, "%.6g", row.speedup_proxy);
        out << row.scenario << "," << to_string(row.mode) << "," << row.timeline_length_mu << ","
            << row.event_count << "," << row.sync_count << "," << row.wall_clock_ns << "," << buf;
        if (with_relative_error) {
            out << ",";
            if (row.relative_error) {
                std::snprintf(buf, sizeof buf, "%.17g", *row.relative_error);
                out << buf;
            }
        }
        out << "\n";
    }
}

}  // namespace rtsim::bench
