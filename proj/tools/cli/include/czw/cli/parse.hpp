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

#include <string_view>
#include <vector>

#include "czw/strings.hpp"

namespace czw::cli {

/// Angle in radians from `pi`, `-pi`, `pi/<k>`, `-pi/<k>` or a decimal.
/// ArgumentError otherwise.
double parse_theta(std::string_view text);

/// Comma-separated angles.
std::vector<double> parse_theta_list(std::string_view text);

/// "1,2,4" -> {1,2,4}. ArgumentError on junk, indices < 1 or repeats.
QubitSet parse_qubit_list(std::string_view text);

} // namespace czw::cli
