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

#include "czw/cli/parse.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "czw/errors.hpp"

namespace czw::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) {
    return {};
  }
  return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    out.push_back(trim(text.substr(pos, comma - pos)));
    if (comma == std::string_view::npos) {
      return out;
    }
    pos = comma + 1;
  }
}

} // namespace

double parse_theta(std::string_view text) {
  const std::string_view original = text;
  text = trim(text);
  const auto bad = [&] {
    return ArgumentError("cannot read angle '" + std::string(original) +
                         "' (use pi, -pi, pi/<k> or a decimal)");
  };

  double sign = 1.0;
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') {
    sign = -1.0;
    body.remove_prefix(1);
  }
  if (body.substr(0, 2) == "pi") {
    body.remove_prefix(2);
    if (body.empty()) {
      return sign * std::numbers::pi;
    }
    if (body.front() != '/') {
      throw bad();
    }
    body.remove_prefix(1);
    long divisor = 0;
    const auto [ptr, ec] =
        std::from_chars(body.data(), body.data() + body.size(), divisor);
    if (ec != std::errc() || ptr != body.data() + body.size() || divisor <= 0) {
      throw bad();
    }
    return sign * std::numbers::pi / static_cast<double>(divisor);
  }

  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() ||
      !std::isfinite(value)) {
    throw bad();
  }
  return value;
}

std::vector<double> parse_theta_list(std::string_view text) {
  std::vector<double> out;
  for (auto item : split_commas(text)) {
    out.push_back(parse_theta(item));
  }
  return out;
}

QubitSet parse_qubit_list(std::string_view text) {
  QubitSet out;
  for (auto item : split_commas(text)) {
    int index = 0;
    const auto [ptr, ec] =
        std::from_chars(item.data(), item.data() + item.size(), index);
    if (item.empty() || ec != std::errc() ||
        ptr != item.data() + item.size() || index < 1 ||
        index > QubitSet::kMaxIndex) {
      throw ArgumentError("bad qubit index '" + std::string(item) + "'");
    }
    if (out.contains(index)) {
      throw ArgumentError("qubit " + std::to_string(index) + " listed twice");
    }
    out.insert(index);
  }
  return out;
}

} // namespace czw::cli
