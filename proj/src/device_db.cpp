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

#include "rtsim/device_db.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "rtsim/errors.hpp"

namespace rtsim {

namespace {

std::string allowed_kinds() {
    std::string out;
    for (DeviceKind kind : all_device_kinds()) {
        if (!out.empty()) {
            out += ", ";
        }
        out += to_string(kind);
    }
    return out;
}

}  // namespace

DeviceDb::DeviceDb(std::vector<DeviceDescriptor> devices) : devices_(std::move(devices)) {
    std::set<std::string> names;
    std::size_t cores = 0;
    for (std::size_t i = 0; i < devices_.size(); ++i) {
        const auto &device = devices_[i];
        const std::string where = "devices[" + std::to_string(i) + "]";
        if (device.name.empty()) {
            throw ConfigError("device database: " + where + ": device names must be non-empty");
        }
        if (!names.insert(device.name).second) {
            throw ConfigError("device database: " + where + ": duplicate device name '" +
                              device.name + "'");
        }
        validate_params(device);
        if (device.kind == DeviceKind::Core) {
            ++cores;
        }
    }
    if (cores != 1) {
        throw ConfigError("device database: expected exactly one core device, found " +
                          std::to_string(cores));
    }
}

const DeviceDescriptor *DeviceDb::find(std::string_view name) const {
    for (const auto &device : devices_) {
        if (device.name == name) {
            return &device;
        }
    }
    return nullptr;
}

const DeviceDescriptor &DeviceDb::core() const {
    for (const auto &device : devices_) {
        if (device.kind == DeviceKind::Core) {
            return device;
        }
    }
    throw ConfigError("device database has no core device");
}

nlohmann::json DeviceDb::to_json() const {
    nlohmann::json devices = nlohmann::json::array();
    for (const auto &device : devices_) {
        nlohmann::json entry{{"name", device.name}, {"kind", to_string(device.kind)}};
        if (!device.params.empty()) {
            entry["params"] = device.params;
        }
        devices.push_back(std::move(entry));
    }
    return nlohmann::json{{"devices", std::move(devices)}};
}

DeviceDb parse_ddb(const nlohmann::json &document, std::string_view source) {
    const std::string where(source);
    if (!document.is_object() || !document.contains("devices") ||
        !document["devices"].is_array()) {
        throw ConfigError(where + ": expected an object with a \"devices\" array");
    }
    std::vector<DeviceDescriptor> devices;
    const auto &entries = document["devices"];
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto &entry = entries[i];
        const std::string at = where + ": devices[" + std::to_string(i) + "]";
        if (!entry.is_object()) {
            throw ConfigError(at + ": expected an object");
        }
        for (const auto &[key, value] : entry.items()) {
            if (key != "name" && key != "kind" && key != "params") {
                throw ConfigError(at + ": unexpected field '" + key + "'");
            }
        }
        if (!entry.contains("name") || !entry["name"].is_string()) {
            throw ConfigError(at + ": missing string field \"name\"");
        }
        if (!entry.contains("kind") || !entry["kind"].is_string()) {
            throw ConfigError(at + ": missing string field \"kind\"");
        }
        DeviceDescriptor descriptor;
        descriptor.name = entry["name"].get<std::string>();
        auto kind_text = entry["kind"].get<std::string>();
        auto kind = parse_device_kind(kind_text);
        if (!kind) {
            throw ConfigError(at + " ('" + descriptor.name + "'): unknown kind '" + kind_text +
                              "' (allowed: " + allowed_kinds() + ")");
        }
        descriptor.kind = *kind;
        if (entry.contains("params")) {
            if (!entry["params"].is_object()) {
                throw ConfigError(at + ": \"params\" must be an object");
            }
            descriptor.params = entry["params"];
        }
        try {
            validate_params(descriptor);
        } catch (const ConfigError &err) {
            throw ConfigError(at + ": " + err.what());
        }
        devices.push_back(std::move(descriptor));
    }
    try {
        return DeviceDb(std::move(devices));
    } catch (const ConfigError &err) {
        throw ConfigError(where + ": " + err.what());
    }
}

DeviceDb parse_ddb_text(std::string_view text, std::string_view source) {
    nlohmann::json document;
    try {
        document = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &err) {
        throw ConfigError(std::string(source) + ": " + err.what());
    }
    return parse_ddb(document, source);
}

DeviceDb load_ddb(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open device database '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_ddb_text(buffer.str(), path);
}

}  // namespace rtsim
