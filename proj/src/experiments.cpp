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

#include "rtsim/experiments.hpp"

#include "rtsim/bench.hpp"
#include "rtsim/errors.hpp"
#include "rtsim/testkit.hpp"

namespace rtsim::experiments {

namespace {

DeviceDescriptor device(std::string name, DeviceKind kind,
                        nlohmann::json params = nlohmann::json::object()) {
    return DeviceDescriptor{std::move(name), kind, std::move(params)};
}

Experiment demo() {
    Experiment exp;
    exp.name = "demo";
    exp.metadata["description"] = "pulses, DDS configuration, and input sampling";
    exp.body = [](Environment &env) {
        SimulationRun &run = env.run();
        testkit::set_input(run, "ttl_in0", "input_prob", 0, 0.5);
        testkit::set_input(run, "pmt0", "input_freq", 0, 200e3);
        testkit::set_input(run, "adc0", "input_v0", 0, 0.25);
        testkit::set_input(run, "adc0", "input_v1", 0, -1.5);

        auto &ttl0 = env.get<TtlOut>("ttl0");
        auto &ttl1 = env.get<TtlOut>("ttl1");
        auto &ttl2 = env.get<TtlOut>("ttl2");
        auto &ttl3 = env.get<TtlOut>("ttl3");
        auto &dds0 = env.get<Dds>("dds0");
        auto &pmt0 = env.get<EdgeCounter>("pmt0");
        auto &ttl_in0 = env.get<TtlIn>("ttl_in0");
        auto &adc0 = env.get<Adc>("adc0");

        env.kernel("demo", [&] {
            env.core().reset();
            dds0.init();
            dds0.set(100e6, 0.25, 0.5);
            ttl0.pulse_mu(1000);
            env.parallel([&] {
                env.sequential([&] { ttl1.pulse_mu(500); });
                env.sequential([&] {
                    ttl2.pulse_mu(200);
                    env.delay_mu(300);
                    ttl2.pulse_mu(200);
                });
            });
            // Latency compensation: switch ttl3 on ahead of the cursor.
            env.delay_mu(-250);
            ttl3.on();
            env.delay_mu(250);
            pmt0.gate_rising_mu(10'000);
            (void)pmt0.fetch_count();
            ttl_in0.sample_input();
            (void)ttl_in0.sample_get();
            (void)adc0.sample();
            env.core().break_realtime();
            ttl3.off();
        });
    };
    return exp;
}

std::vector<Experiment> build() {
    std::vector<Experiment> out{demo()};
    for (const auto &scenario : bench::bundled_scenarios()) {
        out.push_back(bench::make_experiment(scenario));
    }
    return out;
}

}  // namespace

DeviceDb default_ddb() {
    std::vector<DeviceDescriptor> devices{device("core", DeviceKind::Core)};
    for (int i = 0; i < 5; ++i) {
        devices.push_back(device("ttl" + std::to_string(i), DeviceKind::TtlOut));
    }
    devices.push_back(device("ttl_in0", DeviceKind::TtlIn));
    devices.push_back(device("pmt0", DeviceKind::EdgeCounter));
    devices.push_back(device("dds0", DeviceKind::Dds));
    devices.push_back(device("adc0", DeviceKind::Adc, {{"channels", 2}}));
    return DeviceDb(std::move(devices));
}

const std::vector<Experiment> &bundled() {
    static const std::vector<Experiment> experiments = build();
    return experiments;
}

const Experiment &find(std::string_view name) {
    for (const auto &exp : bundled()) {
        if (exp.name == name) {
            return exp;
        }
    }
    std::string names;
    for (const auto &exp : bundled()) {
        names += (names.empty() ? "" : ", ") + exp.name;
    }
    throw Error("unknown experiment '" + std::string(name) + "' (available: " + names + ")");
}

}  // namespace rtsim::experiments
