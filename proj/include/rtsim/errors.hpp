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

#include <stdexcept>
#include <string>

namespace rtsim {

/// Base class of every error raised by the simulator.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Checked 64-bit time arithmetic wrapped around.
class OverflowError : public Error {
  public:
    using Error::Error;
};

/// Misuse of the timing-context stack (e.g. popping the root frame).
class ContextError : public Error {
  public:
    using Error::Error;
};

class SignalError : public Error {
  public:
    using Error::Error;
};

class DeviceError : public Error {
  public:
    using Error::Error;
};

/// Reading an input buffer that holds no values.
class InputBufferError : public DeviceError {
  public:
    using DeviceError::DeviceError;
};

/// Invalid device database or simulation configuration.
class ConfigError : public Error {
  public:
    using Error::Error;
};

/// Raised by testkit::require() when an expectation does not hold.
class AssertionError : public Error {
  public:
    using Error::Error;
};

}  // namespace rtsim
