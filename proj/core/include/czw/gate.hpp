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

#include "czw/state.hpp"
#include "czw/strings.hpp"

namespace czw {

/// Smallest admissible |eta - 1|.
inline constexpr double kEtaTolerance = 1e-9;

/// G_eta on the qubits of `targets`, acting as G_S ⊗ I on the rest.
///
/// The phase is kept as an angle so that |eta| stays exactly 1. An empty
/// target set is legal and means the global phase eta·I.
class PhaseGate {
public:
  /// InvalidPhaseError when |e^{i theta} - 1| <= kEtaTolerance.
  PhaseGate(QubitSet targets, double theta);

  const QubitSet &targets() const { return targets_; }
  double theta() const { return theta_; }
  std::complex<double> eta() const { return std::polar(1.0, theta_); }

  /// Same targets, conjugate phase.
  PhaseGate adjoint() const { return PhaseGate(targets_, -theta_); }
  /// Same phase on a different target set.
  PhaseGate retarget(QubitSet targets) const {
    return PhaseGate(targets, theta_);
  }

private:
  QubitSet targets_;
  double theta_;
};

/// The k-qubit C-SIGN gate (eta = -1).
PhaseGate controlled_sign(QubitSet targets);

/// Multiplies every amplitude whose string is all ones on the targets by eta.
/// DomainError unless targets ⊆ carrier(psi).
PureState apply(const PhaseGate &gate, const PureState &psi);

} // namespace czw
