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

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "czw/separability.hpp"
#include "czw/state.hpp"
#include "czw/strings.hpp"
#include "czw/theorem.hpp"

namespace czw {

enum class FamilyKind {
  kHaar,
  kProduct,
  kForcedFixedPoint,
  kForcedReduce,
  kBasis,
  kPlusAll,
};

const char *to_string(FamilyKind kind);
/// Accepts the names printed by to_string; nullopt otherwise.
std::optional<FamilyKind> family_from_string(const std::string &name);

/// A generator recipe. Fields beyond `kind` and `seed` are read only by the
/// kinds that need them.
struct StateFamily {
  FamilyKind kind = FamilyKind::kHaar;
  std::uint64_t seed = 0;
  /// kProduct: the split; each side gets an independent Haar state.
  Bipartition split;
  /// kForcedFixedPoint / kForcedReduce: the gate's target set.
  QubitSet targets;
  /// kForcedReduce: the qubit forced to 1.
  int witness = 0;
  /// kBasis: the basis string.
  PartialString bits;
};

/// Draws a state on [n]. Forced families zero the defining pattern and
/// renormalize. Draws whose smallest nonzero |amplitude| falls in the band
/// [kZeroTolerance/10, 10·kZeroTolerance] are redrawn.
/// DegenerateFamilyError when zeroing leaves nothing.
PureState generate(const StateFamily &family, int n);

/// Largest n the fuzz sweep accepts.
inline constexpr int kFuzzMaxQubits = 10;

struct FuzzConfig {
  int n_min = 2;
  int n_max = 4;
  std::vector<double> thetas;
  std::vector<FamilyKind> families;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  Tolerances tolerances;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// Everything needed to replay one failing trial.
struct FuzzFailure {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  FamilyKind family = FamilyKind::kHaar;
  int n = 0;
  QubitSet s;
  double theta = 0.0;
  CounterexampleDump dump;
};

struct FuzzSummary {
  std::uint64_t trials = 0;
  /// Trial counts keyed by fired-branch pattern ("(2)", "(1),(3)", ...).
  std::map<std::string, std::uint64_t> branch_histogram;
  /// The same, split by family name.
  std::map<std::string, std::map<std::string, std::uint64_t>> family_histogram;
  std::vector<FuzzFailure> failures;
  std::chrono::nanoseconds wall_time{0};
};

/// One grid point of the sweep.
struct TrialPlan {
  int n = 0;
  QubitSet s;
  double theta = 0.0;
  StateFamily family;
};

/// The plan for trial `index`: cycles through every (n, S with |S| >= 2,
/// theta, family) combination; randomized choices come from a seed derived
/// from (config.seed, index).
TrialPlan plan_trial(const FuzzConfig &config, std::uint64_t index);

/// Runs verify_trichotomy on every planned trial. Trials run concurrently;
/// aggregation is in trial order, so the summary (apart from wall_time) is a
/// function of the config.
FuzzSummary fuzz_trichotomy(const FuzzConfig &config);

} // namespace czw
