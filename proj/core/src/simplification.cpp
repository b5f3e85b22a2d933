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

#include "czw/simplification.hpp"

#include <algorithm>
#include <cmath>

#include "czw/errors.hpp"

namespace czw {

const char *to_string(SimplificationKind kind) {
  switch (kind) {
  case SimplificationKind::kNone:
    return "none";
  case SimplificationKind::kFixedPoint:
    return "fixed_point";
  case SimplificationKind::kReduces:
    return "reduces";
  }
  return "?";
}

namespace {

// Largest |amplitude| over basis indices x with (x & mask) == pattern.
double max_on_pattern(const PureState &psi, std::uint64_t mask,
                      std::uint64_t pattern) {
  double worst = 0.0;
  for (std::uint64_t x = 0; x < psi.dimension(); ++x) {
    if ((x & mask) == pattern) {
      worst = std::max(worst, std::abs(psi[x]));
    }
  }
  return worst;
}

} // namespace

SimplificationVerdict detect_simplification(const PureState &psi,
                                            const QubitSet &s, double tol) {
  if (s.empty()) {
    throw ArgumentError("simplification is undefined for an empty target set");
  }
  if (!s.is_subset_of(psi.carrier())) {
    throw DomainError("set " + s.to_string() + " not inside carrier " +
                      psi.carrier().to_string());
  }

  SimplificationVerdict verdict;
  const std::uint64_t s_mask = position_mask(psi.carrier(), s);
  const double on_ones = max_on_pattern(psi, s_mask, s_mask);
  if (on_ones <= tol) {
    verdict.kind = SimplificationKind::kFixedPoint;
    verdict.max_offending_amplitude = on_ones;
    return verdict;
  }
  for (int i : s.members()) {
    const std::uint64_t bit = position_mask(psi.carrier(), QubitSet{i});
    const double on_zero = max_on_pattern(psi, bit, 0);
    if (on_zero <= tol) {
      verdict.kind = SimplificationKind::kReduces;
      verdict.witness_index = i;
      verdict.max_offending_amplitude = on_zero;
      return verdict;
    }
  }
  verdict.max_offending_amplitude = on_ones;
  return verdict;
}

bool verify_simplification(const PureState &psi, const PhaseGate &gate,
                           const SimplificationVerdict &verdict, double tol) {
  const double bound =
      2.0 * tol * std::sqrt(static_cast<double>(psi.dimension()));
  const PureState out = apply(gate, psi);
  switch (verdict.kind) {
  case SimplificationKind::kNone:
    return false;
  case SimplificationKind::kFixedPoint:
    return distance(out, psi) <= bound;
  case SimplificationKind::kReduces: {
    if (!verdict.witness_index ||
        !gate.targets().contains(*verdict.witness_index)) {
      return false;
    }
    QubitSet smaller = gate.targets();
    smaller.erase(*verdict.witness_index);
    return distance(out, apply(gate.retarget(smaller), psi)) <= bound;
  }
  }
  return false;
}

} // namespace czw
