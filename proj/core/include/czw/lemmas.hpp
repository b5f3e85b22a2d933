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
#include <vector>

#include "czw/state.hpp"

namespace czw {

/// Residual tolerance for lemma equations on unit-scale systems.
inline constexpr double kLemmaTolerance = 1e-9;

enum class LemmaArity { k4Sets = 4, k3Sets = 3, k2Sets = 2 };

/// Coefficients of one lemma instance.
///
/// Shapes by arity (two-index arrays are row-major, entry 2·j + k):
///   4-sets: a_jk, b_lm, c_jl, d_km, four entries each;
///   3-sets: a_jk (4), b_m (2), c_j (2), d_km (4);
///   2-sets: a_j, b_m, c_j, d_m, two entries each.
/// The all-ones equation is a·b = eta·c·d.
struct LemmaSystem {
  LemmaArity arity = LemmaArity::k4Sets;
  std::vector<Amplitude> a, b, c, d;
  Amplitude eta{-1.0, 0.0};
};

enum class ConclusionBranch {
  /// The c entries named by the lemma vanish.
  kCBranchZero,
  kDBranchZero,
  /// Hypothesis fails or a_11·b_11 ≈ 0: the lemma says nothing.
  kVacuous,
  /// Hypothesis holds, nondegenerate, conclusion fails.
  kViolated,
};

const char *to_string(ConclusionBranch branch);

struct LemmaReport {
  bool hypothesis_holds = false;
  bool nondegenerate = false;
  ConclusionBranch conclusion_branch = ConclusionBranch::kVacuous;
  /// Largest hypothesis-equation residual.
  double max_residual = 0.0;
  /// Largest product the conclusion requires to vanish.
  double conclusion_residual = 0.0;
  /// Largest residual of the consequences c01·c10 = eta·c00·c11 and
  /// d01·d10 = eta·d00·d11 (4-sets), d01·d10 = eta·d00·d11 (3-sets);
  /// zero for 2-sets.
  double remark_residual = 0.0;
};

/// A value is "nonzero" when its modulus exceeds 10·tol and "zero" otherwise.
/// Each checker raises ArgumentError on a shape mismatch or |eta - 1| too
/// small.
LemmaReport check_lemma_4sets(const LemmaSystem &sys,
                              double tol = kLemmaTolerance);
LemmaReport check_lemma_3sets(const LemmaSystem &sys,
                              double tol = kLemmaTolerance);
LemmaReport check_lemma_2sets(const LemmaSystem &sys,
                              double tol = kLemmaTolerance);
/// Dispatches on sys.arity.
LemmaReport check_lemma(const LemmaSystem &sys, double tol = kLemmaTolerance);

/// A nondegenerate system satisfying every hypothesis equation, drawn from
/// one of the lemma's two solution families. Free parameters are unit-circle
/// phases, some optional ones set to zero. Deterministic in the seed.
LemmaSystem sample_lemma_system(LemmaArity arity, Amplitude eta,
                                std::uint64_t seed);

} // namespace czw
