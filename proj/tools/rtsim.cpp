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

// rtsim: command-line front end for the real-time control simulator.
//
//   rtsim run <experiment> --ddb PATH [--config regular|optimistic] [--seed N]
//             [--vcd PATH] [--jsonl PATH]
//   rtsim bench scan --points P --samples S (--buffered|--unbuffered) --csv PATH
//   rtsim bench suite --csv PATH
//   rtsim diff A.jsonl B.jsonl [--max K]

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rtsim/rtsim.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct RunOptions {
    std::string experiment;
    std::string ddb_path;
    std::string config = "regular";
    std::uint64_t seed = 0;
    std::string vcd_path;
    std::string jsonl_path;
};

int cmd_run(const RunOptions &opts) {
    const rtsim::Experiment &exp = rtsim::experiments::find(opts.experiment);
    rtsim::DeviceDb ddb = rtsim::load_ddb(opts.ddb_path);
    rtsim::SimConfig config =
        rtsim::SimConfig::for_mode(rtsim::parse_sync_mode(opts.config), opts.seed);
    auto run = rtsim::run_experiment(exp, ddb, config);

    if (!opts.vcd_path.empty()) {
        rtsim::trace::export_vcd(*run, opts.vcd_path);
    }
    if (!opts.jsonl_path.empty()) {
        rtsim::trace::export_jsonl(*run, opts.jsonl_path);
    }

    rtsim::RunStats stats = run->stats();
    std::cout << "experiment: " << exp.name << "\n"
              << "config: " << rtsim::to_string(run->config().mode)
              << " (sync slack " << run->config().sync_slack_mu << " MU)\n"
              << "seed: " << run->config().seed << "\n"
              << "start_cursor_mu: " << stats.start_cursor() << "\n"
              << "final_cursor_mu: " << stats.final_cursor << "\n"
              << "timeline_length_mu: " << stats.timeline_length() << "\n"
              << "event_count: " << stats.event_count << "\n"
              << "sync_count: " << stats.sync_count << "\n"
              << "wall_clock_ns: " << stats.wall_clock_ns << "\n";
    if (run->failed()) {
        std::cout << "status: error\n";
        std::cerr << "rtsim: experiment '" << exp.name << "' failed: " << *run->error() << "\n";
        return kExitFailure;
    }
    std::cout << "status: ok\n";
    return kExitOk;
}

struct BenchOptions {
    std::int64_t points = 20;
    std::int64_t samples = 100;
    bool buffered = false;
    bool unbuffered = false;
    std::string csv_path;
    std::string ddb_path;
    std::string reference_path;
    std::uint64_t seed = 0;
    rtsim::bench::BenchScenario scenario;
};

std::uint64_t effective_seed(std::uint64_t seed) {
    return rtsim::seed_from_environment().value_or(seed);
}

int write_rows(const BenchOptions &opts, std::vector<rtsim::bench::BenchRow> rows) {
    bool with_reference = !opts.reference_path.empty();
    if (with_reference) {
        rtsim::bench::apply_reference(rows, rtsim::bench::load_reference_csv(opts.reference_path));
    }
    std::ofstream out(opts.csv_path);
    if (!out) {
        throw rtsim::Error("cannot open '" + opts.csv_path + "' for writing");
    }
    rtsim::bench::write_csv(out, rows, with_reference);
    rtsim::bench::write_csv(std::cout, rows, with_reference);
    return kExitOk;
}

rtsim::DeviceDb bench_ddb(const BenchOptions &opts) {
    return opts.ddb_path.empty() ? rtsim::experiments::default_ddb()
                                 : rtsim::load_ddb(opts.ddb_path);
}

int cmd_bench_scan(BenchOptions opts) {
    auto &scenario = opts.scenario;
    scenario.name = opts.buffered ? "scan_buffered" : "scan";
    scenario.points = opts.points;
    scenario.samples_per_point = opts.samples;
    scenario.buffered = opts.buffered;
    auto report = rtsim::bench::run_bench(scenario, bench_ddb(opts), effective_seed(opts.seed));
    return write_rows(opts, {report.regular, report.optimistic});
}

int cmd_bench_suite(const BenchOptions &opts) {
    std::vector<rtsim::bench::BenchRow> rows;
    auto ddb = bench_ddb(opts);
    for (const auto &scenario : rtsim::bench::bundled_scenarios()) {
        auto report = rtsim::bench::run_bench(scenario, ddb, effective_seed(opts.seed));
        rows.push_back(report.regular);
        rows.push_back(report.optimistic);
    }
    return write_rows(opts, rows);
}

std::string describe(const rtsim::trace::TraceRecord &r) {
    return "t=" + std::to_string(r.time_mu) + " " + r.device + "." + r.signal + " (" +
           std::string(rtsim::to_string(r.kind)) + ") = " + r.value;
}

int cmd_diff(const std::string &a_path, const std::string &b_path, std::size_t max_shown) {
    auto a = rtsim::trace::load_jsonl(a_path);
    auto b = rtsim::trace::load_jsonl(b_path);

    std::size_t differences = 0;
    std::size_t shown = 0;
    const std::size_t common = std::min(a.records.size(), b.records.size());
    auto report = [&](const std::string &line) {
        ++differences;
        if (shown < max_shown) {
            std::cout << line << "\n";
            ++shown;
        }
    };
    for (std::size_t i = 0; i < common; ++i) {
        if (!(a.records[i] == b.records[i])) {
            report("record " + std::to_string(i) + ":\n  A: " + describe(a.records[i]) +
                   "\n  B: " + describe(b.records[i]));
        }
    }
    for (std::size_t i = common; i < a.records.size(); ++i) {
        report("record " + std::to_string(i) + " only in A: " + describe(a.records[i]));
    }
    for (std::size_t i = common; i < b.records.size(); ++i) {
        report("record " + std::to_string(i) + " only in B: " + describe(b.records[i]));
    }
    if (differences > shown) {
        std::cout << "... " << (differences - shown) << " more divergent records\n";
    }

    bool summary_differs = false;
    if (a.summary != b.summary) {
        summary_differs = true;
        std::cout << "summary differs:\n";
        auto patch = nlohmann::json::diff(a.summary, b.summary);
        for (const auto &op : patch) {
            std::string path = op.value("path", "");
            auto pointer = nlohmann::json::json_pointer(path);
            std::string before = a.summary.contains(pointer) ? a.summary[pointer].dump() : "-";
            std::string after = b.summary.contains(pointer) ? b.summary[pointer].dump() : "-";
            std::cout << "  " << path << ": " << before << " -> " << after << "\n";
        }
    }

    if (differences == 0 && !summary_differs) {
        std::cout << "identical (" << a.records.size() << " records)\n";
        return kExitOk;
    }
    std::cout << differences << " divergent records\n";
    return kExitFailure;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Functional simulator for real-time control software"};
    app.require_subcommand(1);

    RunOptions run_opts;
    auto *run = app.add_subcommand("run", "Run a bundled experiment");
    run->add_option("experiment", run_opts.experiment, "Experiment name")->required();
    run->add_option("--ddb", run_opts.ddb_path, "Device database (JSON)")->required();
    run->add_option("--config", run_opts.config, "Synchronization configuration")
        ->check(CLI::IsMember({"regular", "optimistic"}));
    run->add_option("--seed", run_opts.seed, "RNG seed (RTSIM_SEED overrides)");
    run->add_option("--vcd", run_opts.vcd_path, "Write a VCD waveform");
    run->add_option("--jsonl", run_opts.jsonl_path, "Write a JSON-lines trace");

    BenchOptions bench_opts;
    auto *bench = app.add_subcommand("bench", "Timeline-length and speedup benchmarks");
    bench->require_subcommand(1);
    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--csv", bench_opts.csv_path, "CSV output path")->required();
        cmd->add_option("--ddb", bench_opts.ddb_path, "Device database (default: built-in)");
        cmd->add_option("--seed", bench_opts.seed, "RNG seed (RTSIM_SEED overrides)");
        cmd->add_option("--reference", bench_opts.reference_path,
                        "CSV of hardware timeline lengths (scenario,t_exe_mu)");
    };
    auto *scan = bench->add_subcommand("scan", "Scan scenario under both configurations");
    scan->add_option("--points", bench_opts.points, "Scan points")->check(CLI::PositiveNumber);
    scan->add_option("--samples", bench_opts.samples, "Samples per point")
        ->check(CLI::PositiveNumber);
    auto *buffered = scan->add_flag("--buffered", bench_opts.buffered, "Sync every 16 samples");
    auto *unbuffered =
        scan->add_flag("--unbuffered", bench_opts.unbuffered, "Sync after every sample");
    buffered->excludes(unbuffered);
    scan->add_option("--ttl-pulses", bench_opts.scenario.ttl_pulses, "TTL pulses per sample");
    scan->add_option("--dds-sets", bench_opts.scenario.dds_sets, "DDS sets per sample");
    scan->add_option("--pulse-mu", bench_opts.scenario.pulse_mu, "TTL pulse length");
    scan->add_option("--delay-mu", bench_opts.scenario.delay_per_sample_mu, "Delay per sample");
    add_common(scan);
    auto *suite = bench->add_subcommand("suite", "All bundled scenarios");
    add_common(suite);

    std::string diff_a;
    std::string diff_b;
    std::size_t diff_max = 10;
    auto *diff = app.add_subcommand("diff", "Compare two JSON-lines traces");
    diff->add_option("a", diff_a, "First trace")->required();
    diff->add_option("b", diff_b, "Second trace")->required();
    diff->add_option("--max", diff_max, "Divergent records to print");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &err) {
        int code = app.exit(err);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (run->parsed()) {
            return cmd_run(run_opts);
        }
        if (scan->parsed()) {
            return cmd_bench_scan(bench_opts);
        }
        if (suite->parsed()) {
            return cmd_bench_suite(bench_opts);
        }
        if (diff->parsed()) {
            return cmd_diff(diff_a, diff_b, diff_max);
        }
    } catch (const std::exception &err) {
        std::cerr << "rtsim: " << err.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
