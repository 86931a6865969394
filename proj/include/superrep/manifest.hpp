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

#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace superrep {

/// Reproducibility record written next to every data file the tool emits.
/// Serialization is deterministic: keys are emitted in sorted order.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::uint64_t seed = 0;
  std::string tool_version;
  std::string timestamp;  // ISO 8601, UTC

  std::string to_json() const;
  /// Throws std::invalid_argument on malformed input or missing fields.
  static RunManifest from_json(const std::string& text);
};

std::string tool_version_string();
std::string current_timestamp_iso8601();

}  // namespace superrep
