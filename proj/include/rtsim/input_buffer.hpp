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

#pragma once

#include <cstddef>
#include <deque>
#include <string>
#include <utility>

#include "rtsim/errors.hpp"

namespace rtsim {

/// FIFO of values produced by input events, owned by one driver.
template <class T>
class InputBuffer {
  public:
    explicit InputBuffer(std::string owner = {}) : owner_(std::move(owner)) {}

    void push(T value) { queue_.push_back(std::move(value)); }

    /// Removes and returns the oldest value. Throws InputBufferError when empty.
    T pop() {
        if (queue_.empty()) {
            throw InputBufferError("input buffer of '" + owner_ +
                                   "' is empty: no input event was scheduled for this read");
        }
        T value = std::move(queue_.front());
        queue_.pop_front();
        return value;
    }

    [[nodiscard]] bool empty() const { return queue_.empty(); }
    [[nodiscard]] std::size_t size() const { return queue_.size(); }
    [[nodiscard]] const std::deque<T> &contents() const { return queue_; }

  private:
    std::string owner_;
    std::deque<T> queue_;
};

}  // namespace rtsim
