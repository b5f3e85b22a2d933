// Copyright 2026 The czw Authors
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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "czw/harness.hpp"
#include "czw/theorem.hpp"

namespace czw::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternalContradiction = 2,
  kExitUsage = 64,
  kExitData = 65,
  kExitFile = 66,
};

/// Runs `czw <command> ...`; args[0] is the program name. Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

/// Seed used when --seed is absent: $CZW_SEED if set, else 7.
std::uint64_t default_seed();

/// One-line summary, e.g. "input: separable ({1}|{2}); output: S-entangled
/// (σ₂=0.7071); simplifies: none; trichotomy: HOLDS via (2)".
std::string summary_line(const TrichotomyReport &report);

/// JSON-lines rendering of a fuzz run. Timing goes on its own final line
/// and only when `with_timing` is set.
std::string fuzz_jsonl(const FuzzConfig &config, const FuzzSummary &summary,
                       bool with_timing);

} // namespace czw::cli
