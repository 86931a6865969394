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

#include <stdexcept>
#include <string>

namespace superrep {

/// Instance is valid mathematically but exceeds the supported dense-simulation
/// or exact-arithmetic limits of this implementation.
struct UnsupportedScaleError : std::domain_error {
  explicit UnsupportedScaleError(const std::string& what_arg)
      : std::domain_error(what_arg) {}
};

/// An internal cross-check failed, e.g. an ancilla register that should have
/// been restored to |0...0> carries leftover amplitude.
struct InternalConsistencyError : std::runtime_error {
  explicit InternalConsistencyError(const std::string& what_arg)
      : std::runtime_error(what_arg) {}
};

/// An output file could not be created or written.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

}  // namespace superrep
