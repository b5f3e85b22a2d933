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

#include <numbers>

#include <benchmark/benchmark.h>

#include "czw/harness.hpp"
#include "czw/theorem.hpp"

namespace {

void BM_VerifyTrichotomy(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  const auto psi = czw::generate({.kind = czw::FamilyKind::kHaar, .seed = 4}, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        czw::verify_trichotomy(psi, czw::QubitSet::range(n), std::numbers::pi));
  }
}
BENCHMARK(BM_VerifyTrichotomy)->DenseRange(2, 6, 1);

void BM_FuzzThroughput(benchmark::State &state) {
  czw::FuzzConfig config;
  config.thetas = {std::numbers::pi, std::numbers::pi / 2, 1.0};
  config.families = {czw::FamilyKind::kHaar, czw::FamilyKind::kProduct,
                     czw::FamilyKind::kForcedFixedPoint,
                     czw::FamilyKind::kForcedReduce, czw::FamilyKind::kBasis,
                     czw::FamilyKind::kPlusAll};
  config.trials = 1000;
  config.seed = 7;
  config.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(czw::fuzz_trichotomy(config));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(config.trials));
}
BENCHMARK(BM_FuzzThroughput)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

} // namespace
