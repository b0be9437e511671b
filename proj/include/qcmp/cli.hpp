// Copyright 2026 The qcmp Authors
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
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace qcmp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBackend = 3;

/// Parses "1,80,160", "1:10" or "1:1000:80" (and comma-joined mixes of
/// these) into a list of widths. Throws qcmp::Error on malformed input.
std::vector<std::int64_t> parse_n_values(const std::string& text);

/// Runs one invocation. `args` includes the program name. Report text goes
/// to `out` (or --out), diagnostics to `err`. Returns the exit code.
int run_cli(std::span<const std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace qcmp::cli
