// Copyright 2026 The superrep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "superrep/manifest.hpp"

#include <ctime>
#include <stdexcept>

#include <json.hpp>

namespace superrep {

std::string RunManifest::to_json() const {
  nlohmann::json doc;
  doc["command"] = command;
  doc["parameters"] = parameters;
  doc["seed"] = seed;
  doc["tool_version"] = tool_version;
  doc["timestamp"] = timestamp;
  return doc.dump(2) + "\n";
}

RunManifest RunManifest::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw std::invalid_argument(std::string("RunManifest: bad JSON: ") + err.what());
  }
  RunManifest manifest;
  try {
    manifest.command = doc.at("command").get<std::string>();
    manifest.parameters =
        doc.at("parameters").get<std::map<std::string, std::string>>();
    manifest.seed = doc.at("seed").get<std::uint64_t>();
    manifest.tool_version = doc.at("tool_version").get<std::string>();
    manifest.timestamp = doc.at("timestamp").get<std::string>();
  } catch (const nlohmann::json::exception& err) {
    throw std::invalid_argument(std::string("RunManifest: missing field: ") +
                                err.what());
  }
  return manifest;
}

std::string tool_version_string() { return "0.1.0"; }

std::string current_timestamp_iso8601() {
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

}  // namespace superrep
