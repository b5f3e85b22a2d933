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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "czw/strings.hpp"

namespace czw {

using Amplitude = std::complex<double>;

/// Tolerance on |sum |a|^2 - 1| for a state to count as unit norm.
inline constexpr double kNormTolerance = 1e-9;
/// Desk-scale cap on the carrier size.
inline constexpr int kMaxQubits = 24;

/// A unit vector over the computational basis of the qubits in `carrier`.
///
/// Amplitudes are indexed by basis index: the smallest carrier qubit is the
/// most significant bit. Factor states carry their own carrier (A, B, ...),
/// so scalar products on a subsystem are ordinary lookups on that carrier.
/// Immutable once built.
class PureState {
public:
  /// The zero-qubit state (a single amplitude 1).
  PureState() : amplitudes_{Amplitude{1.0}} {}

  /// Validates length and norm. With `renormalize` the vector is scaled to
  /// unit norm instead of being rejected; a zero vector is still rejected.
  static PureState make(QubitSet carrier, std::vector<Amplitude> amplitudes,
                        bool renormalize = false);
  /// |x> on domain(x).
  static PureState basis(const PartialString &x);

  const QubitSet &carrier() const { return carrier_; }
  int num_qubits() const { return carrier_.size(); }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  Amplitude operator[](std::uint64_t index) const { return amplitudes_[index]; }

  /// <x|psi>; DomainError unless domain(x) equals the carrier.
  Amplitude amplitude(const PartialString &x) const;

  double norm_squared() const;

private:
  PureState(QubitSet carrier, std::vector<Amplitude> amplitudes)
      : carrier_(carrier), amplitudes_(std::move(amplitudes)) {}

  QubitSet carrier_;
  std::vector<Amplitude> amplitudes_;
};

/// Mask over basis-index bit positions occupied by `subset` within `carrier`.
std::uint64_t position_mask(const QubitSet &carrier, const QubitSet &subset);

/// Scatters the low bits of `value` onto the set bits of `mask`, low to high.
std::uint64_t deposit_bits(std::uint64_t value, std::uint64_t mask);
/// Gathers the bits of `value` under `mask` into the low bits.
std::uint64_t extract_bits(std::uint64_t value, std::uint64_t mask);

/// psi_A (x) psi_B on A ∪ B. DomainError when the carriers overlap.
PureState tensor(const PureState &left, const PureState &right);

/// <left|right>; DomainError unless the carriers match.
Amplitude inner_product(const PureState &left, const PureState &right);

/// Euclidean distance between amplitude vectors on the same carrier.
double distance(const PureState &left, const PureState &right);

/// Largest per-amplitude modulus difference on the same carrier.
double max_abs_difference(const PureState &left, const PureState &right);

/// Applies a permutation of two qubits' roles: amplitudes of x and of x with
/// bits i and j exchanged trade places.
PureState swap_qubits(const PureState &psi, int i, int j);

} // namespace czw
