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

#include "czw/cli/state_file.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace czw::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') {
      ++j;
    }
    if (j > i) {
      out.push_back(s.substr(i, j - i));
    }
    i = j;
  }
  return out;
}

double parse_double(std::string_view token, int line) {
  double value = 0.0;
  const char *begin = token.data();
  const char *end = token.data() + token.size();
  if (!token.empty() && *begin == '+') {
    ++begin;
  }
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ParseError("line " + std::to_string(line) + ": bad number '" +
                     std::string(token) + "'");
  }
  return value;
}

} // namespace

PureState parse_state_file(std::string_view text, bool renormalize) {
  int n = -1;
  std::vector<Amplitude> amps;
  std::vector<bool> seen;
  int line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }

    if (n < 0) {
      if (line.substr(0, 2) != "n=") {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected header n=<qubits>");
      }
      const auto digits = line.substr(2);
      const auto [ptr, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), n);
      if (ec != std::errc() || ptr != digits.data() + digits.size() || n < 1 ||
          n > kMaxQubits) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": qubit count must be an integer in [1, " +
                         std::to_string(kMaxQubits) + "]");
      }
      amps.assign(std::size_t{1} << n, Amplitude{});
      seen.assign(amps.size(), false);
      continue;
    }

    const auto tokens = split_ws(line);
    if (tokens.size() != 3) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected '<bitstring> <re> <im>'");
    }
    const auto bits = tokens[0];
    if (static_cast<int>(bits.size()) != n ||
        bits.find_first_not_of("01") != std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": bitstring '" +
                       std::string(bits) + "' is not " + std::to_string(n) +
                       " characters of 0/1");
    }
    std::uint64_t index = 0;
    for (char ch : bits) {
      index = (index << 1) | static_cast<std::uint64_t>(ch == '1');
    }
    if (seen[index]) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": duplicate bitstring " + std::string(bits));
    }
    seen[index] = true;
    amps[index] = {parse_double(tokens[1], line_no),
                   parse_double(tokens[2], line_no)};
  }
  if (n < 0) {
    throw ParseError("missing header n=<qubits>");
  }
  return PureState::make(QubitSet::range(n), std::move(amps), renormalize);
}

std::string serialize_state(const PureState &psi) {
  std::ostringstream out;
  out << "n=" << psi.num_qubits() << '\n';
  char buffer[96];
  for (std::uint64_t x = 0; x < psi.dimension(); ++x) {
    const Amplitude a = psi[x];
    if (a == Amplitude{}) {
      continue;
    }
    std::snprintf(buffer, sizeof buffer, " %.17g %.17g", a.real(), a.imag());
    out << PartialString::from_index(x, psi.carrier()).to_string() << buffer
        << '\n';
  }
  return out.str();
}

} // namespace czw::cli
