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

#include <optional>

#include "czw/gate.hpp"
#include "czw/state.hpp"
#include "czw/strings.hpp"

namespace czw {

/// Amplitudes with modulus at or below this count as zero. Shared by the
/// simplification test and the theorem checks so both use one boundary.
inline constexpr double kZeroTolerance = 1e-9;

enum class SimplificationKind {
  kNone,
  /// No support on strings that are all ones on S: G fixes psi.
  kFixedPoint,
  /// Some i in S is 1 on the whole support: G acts as the gate on S \ {i}.
  kReduces,
};

const char *to_string(SimplificationKind kind);

struct SimplificationVerdict {
  SimplificationKind kind = SimplificationKind::kNone;
  std::optional<int> witness_index;
  /// Largest modulus in the pattern that decided the verdict. For kNone this
  /// is the largest amplitude on the all-ones-on-S pattern.
  double max_offending_amplitude = 0.0;
};

/// Reports kFixedPoint when it holds, else kReduces with the smallest
/// witness, else kNone. ArgumentError for empty S, DomainError when S is not
/// inside the carrier.
SimplificationVerdict detect_simplification(const PureState &psi,
                                            const QubitSet &s,
                                            double tol = kZeroTolerance);

/// Checks the verdict against the statevectors: G psi = psi for kFixedPoint,
/// G psi = G' psi with G' on S \ {witness} for kReduces, each within
/// 2·tol·sqrt(2^n). False on violation or for kNone.
bool verify_simplification(const PureState &psi, const PhaseGate &gate,
                           const SimplificationVerdict &verdict,
                           double tol = kZeroTolerance);

} // namespace czw
