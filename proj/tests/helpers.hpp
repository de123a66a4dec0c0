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

// Helpers shared by the unit and acceptance suites.

#pragma once

#include <cstdint>
#include <random>

#include "oracles/reference_models.hpp"
#include "rtsim/rtsim.hpp"

namespace rtsim::testsupport {

/// Executes an oracle program tree against a time manager.
inline void execute_tree(TimeManager &time, const oracle::Node &node) {
    for (const auto &child : node.children) {
        switch (child.type) {
        case oracle::Node::Type::Delay:
            time.delay_mu(child.duration);
            break;
        case oracle::Node::Type::Seq:
            time.push_context(ContextKind::Sequential);
            execute_tree(time, child);
            time.pop_context();
            break;
        case oracle::Node::Type::Par:
            time.push_context(ContextKind::Parallel);
            execute_tree(time, child);
            time.pop_context();
            break;
        }
    }
}

/// Random kernel whose only variable delays are cursor synchronizations.
/// Uses ttl0..ttl4 and dds0 of experiments::default_ddb().
inline Experiment random_sync_program(std::uint64_t seed) {
    Experiment exp;
    exp.name = "random_sync_" + std::to_string(seed);
    exp.body = [seed](Environment &env) {
        std::mt19937_64 rng(seed);
        auto pick = [&](std::int64_t lo, std::int64_t hi) {
            return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
        };
        auto ttl = [&]() -> TtlOut & {
            return env.get<TtlOut>("ttl" + std::to_string(pick(0, 4)));
        };
        auto &dds = env.get<Dds>("dds0");
        env.kernel("random", [&] {
            if (pick(0, 1) == 0) {
                // some events before the first sync
                ttl().pulse_mu(pick(1, 5000));
            }
            env.core().reset();
            const std::int64_t ops = pick(1, 60);
            for (std::int64_t i = 0; i < ops; ++i) {
                switch (pick(0, 6)) {
                case 0:
                    env.delay_mu(pick(-20'000, 400'000));
                    break;
                case 1:
                    ttl().pulse_mu(pick(1, 100'000));
                    break;
                case 2:
                    env.parallel([&] {
                        ttl().pulse_mu(pick(1, 50'000));
                        env.sequential([&] {
                            env.delay_mu(pick(-5'000, 5'000));
                            ttl().on();
                            env.delay_mu(pick(0, 80'000));
                            ttl().off();
                        });
                    });
                    break;
                case 3:
                    env.core().break_realtime();
                    break;
                case 4:
                    dds.set(static_cast<double>(pick(0, 1'000'000)), 0.5, 0.25);
                    break;
                case 5:
                    env.at_mu(env.now_mu() + pick(-3'000, 30'000));
                    break;
                default:
                    env.delay_mu(-pick(0, 50'000));
                    ttl().on();
                    break;
                }
            }
        });
    };
    return exp;
}

}  // namespace rtsim::testsupport
