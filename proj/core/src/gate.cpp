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

#include "czw/gate.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "czw/errors.hpp"

namespace czw {

PhaseGate::PhaseGate(QubitSet targets, double theta)
    : targets_(targets), theta_(theta) {
  if (!std::isfinite(theta) ||
      !(std::abs(std::polar(1.0, theta) - 1.0) > kEtaTolerance)) {
    throw InvalidPhaseError("phase e^{i*" + std::to_string(theta) +
                            "} is too close to 1");
  }
}

PhaseGate controlled_sign(QubitSet targets) {
  return PhaseGate(targets, std::numbers::pi);
}

PureState apply(const PhaseGate &gate, const PureState &psi) {
  if (!gate.targets().is_subset_of(psi.carrier())) {
    throw DomainError("gate targets " + gate.targets().to_string() +
                      " not inside carrier " + psi.carrier().to_string());
  }
  const std::uint64_t mask = position_mask(psi.carrier(), gate.targets());
  const std::complex<double> eta = gate.eta();
  std::vector<Amplitude> amps(psi.amplitudes().begin(), psi.amplitudes().end());
  for (std::uint64_t x = 0; x < amps.size(); ++x) {
    if ((x & mask) == mask) {
      amps[x] *= eta;
    }
  }
  return PureState::make(psi.carrier(), std::move(amps));
}

} // namespace czw
