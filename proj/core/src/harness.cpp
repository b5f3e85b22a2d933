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

#include "czw/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "czw/errors.hpp"
#include "czw/random.hpp"
#include "czw/simplification.hpp"

namespace czw {

namespace {

constexpr int kMaxRedraws = 64;

std::vector<Amplitude> haar_amplitudes(Rng &rng, int qubits) {
  std::vector<Amplitude> amps(std::size_t{1} << qubits);
  for (auto &a : amps) {
    a = rng.complex_normal();
  }
  return amps;
}

bool in_boundary_band(const PureState &psi) {
  for (const auto &a : psi.amplitudes()) {
    const double m = std::abs(a);
    if (m > 0.0 && m >= kZeroTolerance / 10.0 && m <= 10.0 * kZeroTolerance) {
      return true;
    }
  }
  return false;
}

PureState draw(const StateFamily &family, int n, Rng &rng) {
  const QubitSet universe = QubitSet::range(n);
  switch (family.kind) {
  case FamilyKind::kHaar:
    return PureState::make(universe, haar_amplitudes(rng, n), true);
  case FamilyKind::kProduct: {
    const Bipartition &split = family.split;
    if (!split.a.disjoint_with(split.b) || split.universe() != universe ||
        split.a.empty() || split.b.empty()) {
      throw ArgumentError("product family needs a bipartition of [n]");
    }
    const auto left = PureState::make(
        split.a, haar_amplitudes(rng, split.a.size()), true);
    const auto right = PureState::make(
        split.b, haar_amplitudes(rng, split.b.size()), true);
    return tensor(left, right);
  }
  case FamilyKind::kForcedFixedPoint:
  case FamilyKind::kForcedReduce: {
    const bool fixed = family.kind == FamilyKind::kForcedFixedPoint;
    if (!family.targets.is_subset_of(universe) ||
        (!fixed && !family.targets.contains(family.witness))) {
      throw ArgumentError("forced family targets must lie in [n] and contain "
                          "the witness");
    }
    const std::uint64_t mask =
        fixed ? position_mask(universe, family.targets)
              : position_mask(universe, QubitSet{family.witness});
    const std::uint64_t pattern = fixed ? mask : 0;
    auto amps = haar_amplitudes(rng, n);
    bool any = false;
    for (std::uint64_t x = 0; x < amps.size(); ++x) {
      if ((x & mask) == pattern) {
        amps[x] = 0.0;
      } else {
        any = any || amps[x] != Amplitude{};
      }
    }
    if (!any) {
      throw DegenerateFamilyError("forced pattern zeroes every amplitude");
    }
    return PureState::make(universe, std::move(amps), true);
  }
  case FamilyKind::kBasis:
    if (family.bits.domain() != universe) {
      throw ArgumentError("basis family needs a string on [n]");
    }
    return PureState::basis(family.bits);
  case FamilyKind::kPlusAll: {
    const std::size_t dim = std::size_t{1} << n;
    return PureState::make(
        universe,
        std::vector<Amplitude>(dim, 1.0 / std::sqrt(static_cast<double>(dim))));
  }
  }
  throw ArgumentError("unknown family");
}

} // namespace

const char *to_string(FamilyKind kind) {
  switch (kind) {
  case FamilyKind::kHaar:
    return "haar";
  case FamilyKind::kProduct:
    return "product";
  case FamilyKind::kForcedFixedPoint:
    return "forced_fixed_point";
  case FamilyKind::kForcedReduce:
    return "forced_reduce";
  case FamilyKind::kBasis:
    return "basis";
  case FamilyKind::kPlusAll:
    return "plus_all";
  }
  return "?";
}

std::optional<FamilyKind> family_from_string(const std::string &name) {
  for (auto kind : {FamilyKind::kHaar, FamilyKind::kProduct,
                    FamilyKind::kForcedFixedPoint, FamilyKind::kForcedReduce,
                    FamilyKind::kBasis, FamilyKind::kPlusAll}) {
    if (name == to_string(kind)) {
      return kind;
    }
  }
  return std::nullopt;
}

PureState generate(const StateFamily &family, int n) {
  if (n < 1 || n > kMaxQubits) {
    throw ArgumentError("qubit count out of range: " + std::to_string(n));
  }
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    Rng rng(Rng::derive(family.seed, static_cast<std::uint64_t>(attempt)));
    PureState psi = draw(family, n, rng);
    if (!in_boundary_band(psi)) {
      return psi;
    }
  }
  throw DegenerateFamilyError("every draw landed in the tolerance band");
}

TrialPlan plan_trial(const FuzzConfig &config, std::uint64_t index) {
  struct Point {
    int n;
    QubitSet s;
  };
  // Every (n, S) with |S| >= 2, ordered by n then mask.
  std::vector<Point> points;
  for (int n = config.n_min; n <= config.n_max; ++n) {
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      const QubitSet s = QubitSet::from_mask(mask);
      if (s.size() >= 2) {
        points.push_back({n, s});
      }
    }
  }
  if (points.empty() || config.thetas.empty() || config.families.empty()) {
    throw ArgumentError("fuzz config has an empty sweep");
  }

  const std::uint64_t n_fam = config.families.size();
  const std::uint64_t n_theta = config.thetas.size();
  const std::uint64_t cell = index % (points.size() * n_theta * n_fam);
  const auto &point = points[cell / (n_theta * n_fam)];

  TrialPlan plan;
  plan.n = point.n;
  plan.s = point.s;
  plan.theta = config.thetas[(cell / n_fam) % n_theta];
  plan.family.kind = config.families[cell % n_fam];
  plan.family.seed = Rng::derive(config.seed, index);

  // Side choices get their own stream so they do not shift the state draw.
  Rng rng(Rng::derive(plan.family.seed, 0xfa3117ULL));
  const auto members = plan.s.members();
  switch (plan.family.kind) {
  case FamilyKind::kProduct: {
    const auto splits = bipartitions_splitting(plan.s, plan.n);
    plan.family.split = splits[rng.below(splits.size())];
    break;
  }
  case FamilyKind::kForcedFixedPoint:
    plan.family.targets = plan.s;
    break;
  case FamilyKind::kForcedReduce:
    plan.family.targets = plan.s;
    plan.family.witness = members[rng.below(members.size())];
    break;
  case FamilyKind::kBasis:
    plan.family.bits = PartialString::from_index(
        rng.below(std::uint64_t{1} << plan.n), QubitSet::range(plan.n));
    break;
  case FamilyKind::kHaar:
  case FamilyKind::kPlusAll:
    break;
  }
  return plan;
}

FuzzSummary fuzz_trichotomy(const FuzzConfig &config) {
  const auto start = std::chrono::steady_clock::now();
  if (config.n_min < 2 || config.n_max > kFuzzMaxQubits ||
      config.n_min > config.n_max) {
    throw ArgumentError("fuzz qubit range must lie in [2, " +
                        std::to_string(kFuzzMaxQubits) + "]");
  }
  FuzzSummary summary;
  summary.trials = config.trials;
  if (config.trials == 0) {
    return summary;
  }

  struct Outcome {
    FamilyKind family = FamilyKind::kHaar;
    std::string branches;
    std::optional<FuzzFailure> failure;
  };
  std::vector<Outcome> outcomes(config.trials);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};

  const auto worker = [&] {
    try {
      for (std::uint64_t t = next++; t < config.trials && !failed;
           t = next++) {
        const TrialPlan plan = plan_trial(config, t);
        const PureState psi = generate(plan.family, plan.n);
        const auto report =
            verify_trichotomy(psi, plan.s, plan.theta, config.tolerances);
        Outcome &out = outcomes[t];
        out.family = plan.family.kind;
        out.branches = report.fired_branches();
        if (!report.holds) {
          out.failure = FuzzFailure{t,
                                    plan.family.seed,
                                    plan.family.kind,
                                    plan.n,
                                    plan.s,
                                    plan.theta,
                                    *report.counterexample_dump};
        }
      }
    } catch (...) {
      if (!failed.exchange(true)) {
        error = std::current_exception();
      }
    }
  };

  unsigned threads = config.threads != 0
                         ? config.threads
                         : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, config.trials));
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < threads; ++i) {
      pool.emplace_back(worker);
    }
    worker();
  }
  if (error) {
    std::rethrow_exception(error);
  }

  for (std::uint64_t t = 0; t < config.trials; ++t) {
    Outcome &out = outcomes[t];
    const std::string key = out.branches.empty() ? "none" : out.branches;
    ++summary.branch_histogram[key];
    ++summary.family_histogram[to_string(out.family)][key];
    if (out.failure) {
      summary.failures.push_back(std::move(*out.failure));
    }
  }
  summary.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return summary;
}

} // namespace czw
