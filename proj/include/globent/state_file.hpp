// Copyright 2026 The globent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// PSI 1 text format:
//
//   PSI 1
//   n <qubits>
//   <index> <re> <im>
//   ...
//
// Records may appear in any order; omitted indices are zero and '#' starts
// a comment.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "globent/state.hpp"

namespace globent {

class StateFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// renormalize=false rejects inputs whose norm is off by more than 1e-9.
StateVector parse_state_file(std::string_view text, bool renormalize = false);

/// All 2^n records in index order, 17 significant digits.
std::string format_state_file(const StateVector& state);

StateVector read_state_file(const std::filesystem::path& path, bool renormalize = false);
void write_state_file(const std::filesystem::path& path, const StateVector& state);

}  // namespace globent
