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

// Acceptance suite. Prints one [PASS]/[FAIL] line per criterion and exits
// nonzero if any criterion fails. Pass --update-golden to rewrite the demo
// waveform golden file instead of comparing against it.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "oracles/reference_models.hpp"
#include "rtsim/rtsim.hpp"
#include "vcd_checker.hpp"

using namespace rtsim;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool passed = false;
    std::string detail;
};

int failures = 0;

void report(const char *id, const char *title, const std::function<Outcome()> &check) {
    Outcome outcome;
    try {
        outcome = check();
    } catch (const std::exception &err) {
        outcome = {false, std::string("exception: ") + err.what()};
    }
    if (!outcome.passed) {
        ++failures;
    }
    std::printf("[%s] %s %s: %s\n", outcome.passed ? "PASS" : "FAIL", id, title,
                outcome.detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const char *format, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, format, a, b);
    return buf;
}

std::string jsonl_of(const SimulationRun &run) {
    std::ostringstream out;
    trace::write_jsonl(run, out);
    return out.str();
}

Outcome context_stack_oracle() {
    auto start = Clock::now();
    std::size_t max_delays = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        oracle::TreeGenerator gen(seed, 6, 50, 1'000'000);
        oracle::Node tree = gen.root();
        max_delays = std::max(max_delays, oracle::count_delays(tree));
        TimeManager time(SimConfig::regular());
        testsupport::execute_tree(time, tree);
        if (time.now_mu() != oracle::evaluate(tree) || time.depth() != 1) {
            return {false, "tree " + std::to_string(seed) + ": cursor " +
                               std::to_string(time.now_mu()) + ", oracle " +
                               std::to_string(oracle::evaluate(tree))};
        }
    }
    double elapsed = seconds_since(start);
    return {elapsed < 5.0, fmt("1000 trees exact (largest %.0f delays) in %.3f s, limit 5 s",
                               static_cast<double>(max_delays), elapsed)};
}

Outcome signal_store_oracle() {
    auto start = Clock::now();
    std::size_t pulls = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        std::mt19937_64 rng(seed);
        auto pick = [&](std::int64_t lo, std::int64_t hi) {
            return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
        };
        TimeManager time(SimConfig::regular());
        SignalManager signals;
        SignalId id = signals.register_signal("dev", "value", ValueKind::Int);
        oracle::PushLog<std::int64_t> log;
        // narrow time ranges force duplicate timestamps
        const std::int64_t span = pick(1, 2000);
        const std::int64_t pushes = pick(0, 1000);
        for (std::int64_t i = 0; i < pushes; ++i) {
            std::int64_t t = pick(-span, span);
            std::int64_t v = pick(-1'000'000, 1'000'000);
            signals.push(id, v, t);
            log.push(t, v);
            if (pick(0, 4) == 0) {
                std::int64_t q = pick(-span - 10, span + 10);
                SignalValue got = signals.pull(id, q);
                auto want = log.pull(q);
                ++pulls;
                if (want ? got != SignalValue(*want) : !got.is_unknown()) {
                    return {false, "script " + std::to_string(seed) + ": pull mismatch at t = " +
                                       std::to_string(q)};
                }
            }
        }
        if (signals.signal(id).size() != log.surviving().size()) {
            return {false, "script " + std::to_string(seed) + ": surviving event count differs"};
        }
    }
    double elapsed = seconds_since(start);
    return {elapsed < 10.0, fmt("1000 scripts, %.0f pulls exact in %.3f s, limit 10 s",
                                static_cast<double>(pulls), elapsed)};
}

Outcome sync_law() {
    std::size_t checked_programs = 0;
    auto check = [&](const Experiment &exp, const DeviceDb &ddb) -> std::optional<std::string> {
        auto regular = run_experiment(exp, ddb, SimConfig::regular());
        auto optimistic = run_experiment(exp, ddb, SimConfig::optimistic());
        if (regular->failed() || optimistic->failed()) {
            return exp.name + " failed: " + regular->error().value_or(optimistic->error().value_or(""));
        }
        RunStats r = regular->stats();
        RunStats o = optimistic->stats();
        const auto sync = static_cast<TimeMu>(r.sync_count);
        ++checked_programs;
        if (o.sync_count != r.sync_count) {
            return exp.name + ": sync counts differ";
        }
        if (r.final_cursor - o.final_cursor != kRegularSyncSlackMu * sync) {
            return exp.name + ": final cursor difference " +
                   std::to_string(r.final_cursor - o.final_cursor) + " != 125000 x " +
                   std::to_string(sync);
        }
        if (sync > 0 &&
            r.timeline_length() - o.timeline_length() != kRegularSyncSlackMu * (sync - 1)) {
            return exp.name + ": length difference " +
                   std::to_string(r.timeline_length() - o.timeline_length());
        }
        return std::nullopt;
    };
    const DeviceDb ddb = experiments::default_ddb();
    for (const auto &scenario : bench::bundled_scenarios()) {
        if (auto err = check(bench::make_experiment(scenario), ddb)) {
            return {false, *err};
        }
    }
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        if (auto err = check(testsupport::random_sync_program(seed), ddb)) {
            return {false, *err};
        }
    }
    return {true, std::to_string(checked_programs) +
                      " programs: final cursor difference = 125000 x sync_count and length "
                      "difference = 125000 x (sync_count - 1), exact"};
}

Outcome measurement_protocol() {
    const auto &scan = bench::bundled_scenario("scan");
    if (scan.points != 20 || scan.samples_per_point != 100 || scan.buffered) {
        return {false, "bundled scan is not the 20 x 100 unbuffered scenario"};
    }
    auto report = bench::run_bench(scan, experiments::default_ddb(), 0);
    const bench::BenchRow &reg = report.regular;
    const bench::BenchRow &opt = report.optimistic;
    if (reg.timeline_length_mu != reg.final_cursor_mu - reg.start_cursor_mu ||
        opt.timeline_length_mu != opt.final_cursor_mu - opt.start_cursor_mu) {
        return {false, "timeline length is not final cursor minus cursor after first sync"};
    }
    std::vector<bench::BenchRow> rows{opt};
    bench::apply_reference(rows, {{scan.name, reg.timeline_length_mu}});
    const double reported = rows[0].relative_error.value();
    const double expected = -static_cast<double>(kRegularSyncSlackMu *
                                                 (static_cast<TimeMu>(reg.sync_count) - 1)) /
                            static_cast<double>(reg.timeline_length_mu);
    const double rel = std::fabs(reported - expected) / std::fabs(expected);
    return {rel <= 1e-12, fmt("relative_error %.15g vs closed form, relative deviation %.3g "
                              "(limit 1e-12)",
                              reported, rel) +
                              ", sync_count " + std::to_string(reg.sync_count)};
}

Outcome determinism() {
    std::size_t compared = 0;
    for (const Experiment &exp : experiments::bundled()) {
        for (SyncMode mode : {SyncMode::Regular, SyncMode::Optimistic}) {
            for (std::uint64_t seed : {0ULL, 12345ULL}) {
                auto a = run_experiment(exp, experiments::default_ddb(), SimConfig::for_mode(mode, seed));
                auto b = run_experiment(exp, experiments::default_ddb(), SimConfig::for_mode(mode, seed));
                if (jsonl_of(*a) != jsonl_of(*b)) {
                    return {false, exp.name + " (" + std::string(to_string(mode)) +
                                       "): JSONL exports differ"};
                }
                ++compared;
            }
        }
    }
    return {true, std::to_string(compared) + " run pairs across " +
                      std::to_string(experiments::bundled().size()) +
                      " bundled experiments byte-identical"};
}

Outcome device_semantics() {
    const DeviceDb ddb = experiments::default_ddb();
    std::vector<std::string> failed;
    auto expect = [&](bool ok, const char *what) {
        if (!ok) {
            failed.emplace_back(what);
        }
    };
    std::size_t checks = 0;
    auto count = [&](bool ok, const char *what) {
        ++checks;
        expect(ok, what);
    };

    {
        SimulationRun run(ddb, SimConfig::regular());
        run.time().at_mu(100);
        run.device<TtlOut>("ttl0").pulse_mu(1000);
        count(testkit::assert_events(run, "ttl0", "state", {{100, true}, {1100, false}}).passed,
              "pulse");
        run.time().at_mu(5000);
        run.device<TtlOut>("ttl1").on();
        run.device<TtlOut>("ttl1").off();
        count(testkit::assert_events(run, "ttl1", "state", {{5000, false}}).passed,
              "same-timestamp overwrite");
    }
    for (double p : {0.0, 1.0}) {
        SimulationRun run(ddb, SimConfig::regular(99));
        testkit::set_input(run, "ttl_in0", "input_prob", 0, p);
        auto &in = run.device<TtlIn>("ttl_in0");
        bool all = true;
        for (int i = 0; i < 1000; ++i) {
            in.sample_input();
            all = all && in.sample_get() == (p == 1.0 ? 1 : 0);
        }
        count(all, p == 0.0 ? "bernoulli p=0" : "bernoulli p=1");
    }
    {
        SimulationRun run(ddb, SimConfig::regular(12345));
        testkit::set_input(run, "ttl_in0", "input_prob", 0, 0.5);
        auto &in = run.device<TtlIn>("ttl_in0");
        std::vector<std::int64_t> draws;
        for (int i = 0; i < 8; ++i) {
            in.sample_input();
            draws.push_back(in.sample_get());
        }
        count(draws == std::vector<std::int64_t>{0, 0, 1, 1, 0, 0, 0, 1}, "bernoulli golden");
    }
    {
        SimulationRun run(ddb, SimConfig::regular());
        testkit::set_input(run, "pmt0", "input_freq", 0, 1e6);
        auto &pmt = run.device<EdgeCounter>("pmt0");
        pmt.gate_rising_mu(1'000'000);
        count(pmt.fetch_count() == 1000, "edge count 1 MHz x 1 ms");
        testkit::set_input(run, "pmt0", "input_freq", run.time().now_mu(), 0.0);
        pmt.gate_rising_mu(1'000'000);
        count(pmt.fetch_count() == 0, "edge count f = 0");
    }
    {
        DeviceDb poisson({{"core", DeviceKind::Core, nlohmann::json::object()},
                          {"pmt0", DeviceKind::EdgeCounter, {{"counter_mode", "poisson"}}}});
        SimulationRun run(poisson, SimConfig::regular(7));
        testkit::set_input(run, "pmt0", "input_freq", 0, 1e3);
        auto &pmt = run.device<EdgeCounter>("pmt0");
        pmt.gate_rising_mu(1'000'000);
        count(pmt.fetch_count() == 2, "poisson golden");
    }
    {
        SimulationRun run(ddb, SimConfig::regular());
        run.time().at_mu(300);
        run.device<Dds>("dds0").set(1e8, 0.25, 0.5);
        count(testkit::expect(run, "dds0", "freq", 300, 1e8).passed &&
                  testkit::expect(run, "dds0", "phase", 300, 0.25).passed &&
                  testkit::expect(run, "dds0", "amp", 300, 0.5).passed &&
                  run.time().now_mu() == 300,
              "dds set");
        run.device<Dds>("dds0").init();
        count(run.time().now_mu() == 300 + timing::kDdsInitDelayMu, "dds init delay");
    }
    {
        SimulationRun run(ddb, SimConfig::regular());
        testkit::set_input(run, "adc0", "input_v0", 0, 1.0);
        testkit::set_input(run, "adc0", "input_v1", 0, 2.0);
        count(run.device<Adc>("adc0").sample() == std::vector<double>{1.0, 2.0}, "adc sample");
    }
    {
        SimulationRun run(ddb, SimConfig::regular());
        run.core().reset();
        count(run.time().now_mu() == 125'000, "reset regular");
        SimulationRun opt(ddb, SimConfig::optimistic());
        opt.core().reset();
        count(opt.time().now_mu() == 0, "reset optimistic");
    }
    if (!failed.empty()) {
        std::string names;
        for (const auto &f : failed) {
            names += (names.empty() ? "" : ", ") + f;
        }
        return {false, "failed: " + names};
    }
    return {true, std::to_string(checks) + " golden checks exact"};
}

Outcome performance_envelope() {
    SignalManager signals;
    SignalId id = signals.register_signal("dev", "value", ValueKind::Int);
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<TimeMu> times(0, 4'000'000'000LL);
    auto start = Clock::now();
    for (std::int64_t i = 0; i < 1'000'000; ++i) {
        signals.push(id, i, times(rng));
    }
    std::int64_t known = 0;
    for (int i = 0; i < 100'000; ++i) {
        known += signals.pull(id, times(rng)).is_unknown() ? 0 : 1;
    }
    double elapsed = seconds_since(start);
    return {elapsed < 5.0 && known > 0,
            fmt("1e6 pushes + 1e5 pulls in %.3f s, limit 5 s", elapsed)};
}

Outcome speedup_direction() {
    const DeviceDb ddb = experiments::default_ddb();
    auto median_speedup = [&](const bench::BenchScenario &scenario, const SimConfig &config) {
        std::vector<double> values;
        for (int i = 0; i < 3; ++i) {
            values.push_back(bench::run_scenario(scenario, ddb, config).speedup_proxy);
        }
        std::sort(values.begin(), values.end());
        return values[1];
    };
    std::string detail;
    bool ok = true;
    for (const SimConfig &config : {SimConfig::regular(), SimConfig::optimistic()}) {
        double delay = median_speedup(bench::bundled_scenario("delay_dominated"), config);
        double events = median_speedup(bench::bundled_scenario("event_dominated"), config);
        double ratio = delay / events;
        ok = ok && ratio >= 10.0;
        detail += (detail.empty() ? "" : "; ") + std::string(to_string(config.mode)) +
                  fmt(" delay_dominated %.4g vs event_dominated %.4g", delay, events) +
                  fmt(" (ratio %.1f, need >= 10)", ratio);
    }
    return {ok, detail};
}

Outcome vcd_validity(bool update_golden) {
    auto run = run_experiment(experiments::find("demo"), experiments::default_ddb(),
                              SimConfig::regular(0));
    if (run->failed()) {
        return {false, "demo failed: " + *run->error()};
    }
    std::ostringstream out;
    trace::write_vcd(*run, out);
    const std::string vcd = out.str();
    auto dump = testsupport::check_vcd(vcd);
    if (!dump.ok()) {
        return {false, "conformance: " + dump.errors.front()};
    }
    const std::string path = std::string(RTSIM_GOLDEN_DIR) + "/demo.vcd";
    if (update_golden) {
        std::ofstream golden(path, std::ios::binary);
        golden << vcd;
        return {static_cast<bool>(golden), "golden rewritten at " + path};
    }
    std::ifstream golden(path, std::ios::binary);
    if (!golden) {
        return {false, "missing golden file " + path};
    }
    std::stringstream expected;
    expected << golden.rdbuf();
    if (expected.str() != vcd) {
        return {false, "demo VCD differs from " + path};
    }
    return {true, std::to_string(dump.vars.size()) + " variables in " +
                      std::to_string(dump.scopes.size()) +
                      " scopes conform; byte-identical to golden"};
}

}  // namespace

int main(int argc, char **argv) {
    bool update_golden = argc > 1 && std::strcmp(argv[1], "--update-golden") == 0;
    // the suite pins its own seeds
    ::unsetenv(kSeedEnvVar);

    report("AC1", "context-stack oracle", context_stack_oracle);
    report("AC2", "signal-store oracle", signal_store_oracle);
    report("AC3", "sync law", sync_law);
    report("AC4", "measurement protocol", measurement_protocol);
    report("AC5", "determinism", determinism);
    report("AC6", "device semantics", device_semantics);
    report("AC7", "performance envelope", performance_envelope);
    report("AC8", "speedup direction", speedup_direction);
    report("AC9", "VCD validity", [&] { return vcd_validity(update_golden); });

    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
