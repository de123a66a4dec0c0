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

// Reference models used by the tests. They evaluate the timing and signal
// rules directly and share no code with the simulator.

#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace rtsim::oracle {

/// A program tree of delays and nested timing contexts.
struct Node {
    enum class Type { Delay, Seq, Par };
    Type type = Type::Delay;
    std::int64_t duration = 0;
    std::vector<Node> children;
};

/// Cursor advance of a node: sequential nodes sum their children, parallel
/// nodes take max(0, children...).
inline std::int64_t evaluate(const Node &node) {
    switch (node.type) {
    case Node::Type::Delay:
        return node.duration;
    case Node::Type::Seq: {
        std::int64_t sum = 0;
        for (const auto &child : node.children) {
            sum += evaluate(child);
        }
        return sum;
    }
    case Node::Type::Par: {
        std::int64_t longest = 0;
        for (const auto &child : node.children) {
            longest = std::max(longest, evaluate(child));
        }
        return longest;
    }
    }
    return 0;
}

inline std::size_t count_delays(const Node &node) {
    if (node.type == Node::Type::Delay) {
        return 1;
    }
    std::size_t n = 0;
    for (const auto &child : node.children) {
        n += count_delays(child);
    }
    return n;
}

/// Random tree with at most \p max_delays delay leaves and nesting depth
/// \p max_depth; durations uniform in [-max_abs, max_abs].
class TreeGenerator {
  public:
    TreeGenerator(std::uint64_t seed, int max_depth, std::size_t max_delays, std::int64_t max_abs)
        : rng_(seed), max_depth_(max_depth), max_delays_(max_delays), max_abs_(max_abs) {}

    Node root() {
        budget_ = std::uniform_int_distribution<std::size_t>(0, max_delays_)(rng_);
        Node node{Node::Type::Seq, 0, {}};
        fill(node, 1);
        return node;
    }

  private:
    void fill(Node &node, int depth) {
        std::size_t children = std::uniform_int_distribution<std::size_t>(0, 6)(rng_);
        for (std::size_t i = 0; i < children && budget_ > 0; ++i) {
            int pick = std::uniform_int_distribution<int>(0, 9)(rng_);
            if (pick < 3 && depth < max_depth_) {
                Node child{pick == 0 ? Node::Type::Seq : Node::Type::Par, 0, {}};
                fill(child, depth + 1);
                node.children.push_back(std::move(child));
            } else {
                --budget_;
                std::int64_t d =
                    std::uniform_int_distribution<std::int64_t>(-max_abs_, max_abs_)(rng_);
                node.children.push_back(Node{Node::Type::Delay, d, {}});
            }
        }
    }

    std::mt19937_64 rng_;
    int max_depth_;
    std::size_t max_delays_;
    std::int64_t max_abs_;
    std::size_t budget_ = 0;
};

/// Naive signal store: an append-only push log scanned linearly.
template <class Value>
class PushLog {
  public:
    void push(std::int64_t time, Value value) { log_.emplace_back(time, std::move(value)); }

    /// Latest-timestamp event at or before \p time; later pushes win ties.
    std::optional<Value> pull(std::int64_t time) const {
        std::optional<std::int64_t> best_time;
        std::optional<Value> best;
        for (const auto &[t, v] : log_) {
            if (t <= time && (!best_time || t >= *best_time)) {
                best_time = t;
                best = v;
            }
        }
        return best;
    }

    /// Surviving (time, value) pairs in ascending time.
    std::vector<std::pair<std::int64_t, Value>> surviving() const {
        std::vector<std::pair<std::int64_t, Value>> out;
        for (const auto &[t, v] : log_) {
            auto it = std::find_if(out.begin(), out.end(), [&](const auto &e) { return e.first == t; });
            if (it != out.end()) {
                it->second = v;
            } else {
                out.emplace_back(t, v);
            }
        }
        std::sort(out.begin(), out.end(),
                  [](const auto &a, const auto &b) { return a.first < b.first; });
        return out;
    }

    std::size_t size() const { return log_.size(); }

  private:
    std::vector<std::pair<std::int64_t, Value>> log_;
};

}  // namespace rtsim::oracle
