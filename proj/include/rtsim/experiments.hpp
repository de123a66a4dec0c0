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

#include <string_view>
#include <vector>

#include "rtsim/device_db.hpp"
#include "rtsim/environment.hpp"

namespace rtsim::experiments {

/// Device database the bundled experiments are written against. Matches
/// data/device_db.json.
DeviceDb default_ddb();

/// demo, scan, scan_buffered, delay_dominated, event_dominated.
const std::vector<Experiment> &bundled();

/// Throws Error listing the available names when \p name is unknown.
const Experiment &find(std::string_view name);

}  // namespace rtsim::experiments
