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

#include "czw/state.hpp"

#include <cmath>
#include <string>

#include "czw/errors.hpp"

namespace czw {

PureState PureState::make(QubitSet carrier, std::vector<Amplitude> amplitudes,
                          bool renormalize) {
  if (carrier.size() > kMaxQubits) {
    throw ShapeError("carrier of " + std::to_string(carrier.size()) +
                     " qubits exceeds the cap of " +
                     std::to_string(kMaxQubits));
  }
  const std::size_t expected = std::size_t{1} << carrier.size();
  if (amplitudes.size() != expected) {
    throw ShapeError("expected " + std::to_string(expected) +
                     " amplitudes for carrier " + carrier.to_string() +
                     ", got " + std::to_string(amplitudes.size()));
  }
  double norm2 = 0.0;
  for (const auto &a : amplitudes) {
    norm2 += std::norm(a);
  }
  if (renormalize) {
    if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
      throw NormalizationError("cannot renormalize a zero or non-finite vector");
    }
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto &a : amplitudes) {
      a *= scale;
    }
  } else if (!(std::abs(norm2 - 1.0) <= kNormTolerance)) {
    throw NormalizationError("squared norm " + std::to_string(norm2) +
                             " deviates from 1");
  }
  return PureState(carrier, std::move(amplitudes));
}

PureState PureState::basis(const PartialString &x) {
  std::vector<Amplitude> amps(std::size_t{1} << x.domain().size());
  amps[x.index()] = 1.0;
  return PureState(x.domain(), std::move(amps));
}

Amplitude PureState::amplitude(const PartialString &x) const {
  if (x.domain() != carrier_) {
    throw DomainError("string domain " + x.domain().to_string() +
                      " differs from state carrier " + carrier_.to_string());
  }
  return amplitudes_[x.index()];
}

double PureState::norm_squared() const {
  double n2 = 0.0;
  for (const auto &a : amplitudes_) {
    n2 += std::norm(a);
  }
  return n2;
}

std::uint64_t position_mask(const QubitSet &carrier, const QubitSet &subset) {
  const auto members = carrier.members();
  const int width = static_cast<int>(members.size());
  std::uint64_t mask = 0;
  for (int t = 0; t < width; ++t) {
    if (subset.contains(members[static_cast<std::size_t>(t)])) {
      mask |= std::uint64_t{1} << (width - 1 - t);
    }
  }
  return mask;
}

std::uint64_t deposit_bits(std::uint64_t value, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (std::uint64_t m = mask; m != 0; m &= m - 1, value >>= 1) {
    if (value & 1U) {
      out |= m & (~m + 1);
    }
  }
  return out;
}

std::uint64_t extract_bits(std::uint64_t value, std::uint64_t mask) {
  std::uint64_t out = 0;
  int shift = 0;
  for (std::uint64_t m = mask; m != 0; m &= m - 1, ++shift) {
    if (value & m & (~m + 1)) {
      out |= std::uint64_t{1} << shift;
    }
  }
  return out;
}

PureState tensor(const PureState &left, const PureState &right) {
  if (!left.carrier().disjoint_with(right.carrier())) {
    throw DomainError("tensor of states with overlapping carriers " +
                      left.carrier().to_string() + " and " +
                      right.carrier().to_string());
  }
  const QubitSet carrier = left.carrier() | right.carrier();
  const std::uint64_t left_mask = position_mask(carrier, left.carrier());
  const std::uint64_t right_mask = position_mask(carrier, right.carrier());
  std::vector<Amplitude> amps(std::size_t{1} << carrier.size());
  for (std::uint64_t y = 0; y < left.dimension(); ++y) {
    const std::uint64_t y_bits = deposit_bits(y, left_mask);
    for (std::uint64_t z = 0; z < right.dimension(); ++z) {
      amps[y_bits | deposit_bits(z, right_mask)] = left[y] * right[z];
    }
  }
  return PureState::make(carrier, std::move(amps), true);
}

namespace {

void require_same_carrier(const PureState &left, const PureState &right) {
  if (left.carrier() != right.carrier()) {
    throw DomainError("states live on different carriers " +
                      left.carrier().to_string() + " and " +
                      right.carrier().to_string());
  }
}

} // namespace

Amplitude inner_product(const PureState &left, const PureState &right) {
  require_same_carrier(left, right);
  Amplitude sum = 0.0;
  for (std::uint64_t i = 0; i < left.dimension(); ++i) {
    sum += std::conj(left[i]) * right[i];
  }
  return sum;
}

double distance(const PureState &left, const PureState &right) {
  require_same_carrier(left, right);
  double sum = 0.0;
  for (std::uint64_t i = 0; i < left.dimension(); ++i) {
    sum += std::norm(left[i] - right[i]);
  }
  return std::sqrt(sum);
}

double max_abs_difference(const PureState &left, const PureState &right) {
  require_same_carrier(left, right);
  double worst = 0.0;
  for (std::uint64_t i = 0; i < left.dimension(); ++i) {
    worst = std::max(worst, std::abs(left[i] - right[i]));
  }
  return worst;
}

PureState swap_qubits(const PureState &psi, int i, int j) {
  const QubitSet &carrier = psi.carrier();
  if (!carrier.contains(i) || !carrier.contains(j)) {
    throw DomainError("swap of qubits outside the carrier");
  }
  const std::uint64_t bit_i = position_mask(carrier, QubitSet{i});
  const std::uint64_t bit_j = position_mask(carrier, QubitSet{j});
  std::vector<Amplitude> amps(psi.dimension());
  for (std::uint64_t x = 0; x < psi.dimension(); ++x) {
    std::uint64_t y = x & ~(bit_i | bit_j);
    if (x & bit_i) {
      y |= bit_j;
    }
    if (x & bit_j) {
      y |= bit_i;
    }
    amps[y] = psi[x];
  }
  return PureState::make(carrier, std::move(amps));
}

} // namespace czw
