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

#include <string>
#include <string_view>

#include "czw/errors.hpp"
#include "czw/state.hpp"

namespace czw::cli {

/// Malformed state file text.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Parses the state file format:
///
///     # comment
///     n=2
///     00 0.5 0
///     11 -0.5 0
///
/// The first non-comment line is `n=<int>`; every later line is
/// `<bitstring> <re> <im>`, leftmost character = qubit 1. Unlisted basis
/// states are zero. ParseError on malformed lines or duplicate bitstrings;
/// NormalizationError when the norm is off and `renormalize` is false.
PureState parse_state_file(std::string_view text, bool renormalize = false);

/// Writes the nonzero amplitudes with 17 significant digits, so parsing the
/// result gives back the same doubles.
std::string serialize_state(const PureState &psi);

} // namespace czw::cli
