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

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rtsim/devices.hpp"

namespace rtsim {

/**
 * Declarative list of simulated devices.
 *
 * File format:
 * \code{.json}
 * {"devices": [{"name": "core", "kind": "core"},
 *              {"name": "ttl0", "kind": "ttl_out"},
 *              {"name": "dds0", "kind": "dds", "params": {"init_delay_mu": 0}}]}
 * \endcode
 * Names are unique and exactly one device has kind "core".
 */
class DeviceDb {
  public:
    DeviceDb() = default;
    /// Validates \p devices; throws ConfigError.
    explicit DeviceDb(std::vector<DeviceDescriptor> devices);

    [[nodiscard]] const std::vector<DeviceDescriptor> &devices() const { return devices_; }
    [[nodiscard]] std::size_t size() const { return devices_.size(); }
    [[nodiscard]] const DeviceDescriptor *find(std::string_view name) const;
    [[nodiscard]] const DeviceDescriptor &core() const;

    [[nodiscard]] nlohmann::json to_json() const;

  private:
    std::vector<DeviceDescriptor> devices_;
};

/// Builds a DeviceDb from a parsed document. \p source names the origin in errors.
DeviceDb parse_ddb(const nlohmann::json &document, std::string_view source = "<memory>");
DeviceDb parse_ddb_text(std::string_view text, std::string_view source = "<memory>");
DeviceDb load_ddb(const std::string &path);

}  // namespace rtsim
