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

#include "czw/lemmas.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "czw/errors.hpp"
#include "oracles.hpp"

namespace czw {
namespace {

constexpr Amplitude kI{0.0, 1.0};

using testing::lemma_hypothesis_residual;

LemmaSystem four_sets_example() {
  return {LemmaArity::k4Sets, {0, 0, 0, 1}, {0, 1, 0, kI}, {0, 0, 1, 1},
          {0, 0, 0, 1}, kI};
}

TEST(Lemma4Sets, Examples) {
  const auto sys = four_sets_example();
  EXPECT_EQ(lemma_hypothesis_residual(sys), 0.0);
  const auto report = check_lemma_4sets(sys);
  EXPECT_TRUE(report.hypothesis_holds);
  EXPECT_TRUE(report.nondegenerate);
  EXPECT_EQ(report.conclusion_branch, ConclusionBranch::kDBranchZero);
  EXPECT_EQ(report.max_residual, 0.0);

  const LemmaSystem zero{LemmaArity::k4Sets, {0, 0, 0, 0}, {0, 0, 0, 0},
                         {0, 0, 0, 0}, {0, 0, 0, 0}, kI};
  const auto vacuous = check_lemma_4sets(zero);
  EXPECT_TRUE(vacuous.hypothesis_holds);
  EXPECT_FALSE(vacuous.nondegenerate);
  EXPECT_EQ(vacuous.conclusion_branch, ConclusionBranch::kVacuous);

  auto bent = sys;
  bent.d[0] = 0.1;
  EXPECT_NEAR(lemma_hypothesis_residual(bent), 0.1, 1e-15);
  const auto failed = check_lemma_4sets(bent);
  EXPECT_FALSE(failed.hypothesis_holds);
  EXPECT_NEAR(failed.max_residual, 0.1, 1e-15);
  EXPECT_EQ(failed.conclusion_branch, ConclusionBranch::kVacuous);
}

TEST(Lemma3Sets, Examples) {
  const LemmaSystem sys{LemmaArity::k3Sets, {0, 0, 0, 1}, {0, -1}, {0, 1},
                        {0, 0, 0, 1}, -1.0};
  EXPECT_EQ(lemma_hypothesis_residual(sys), 0.0);
  const auto report = check_lemma_3sets(sys);
  EXPECT_TRUE(report.hypothesis_holds);
  EXPECT_TRUE(report.nondegenerate);
  EXPECT_EQ(report.conclusion_branch, ConclusionBranch::kCBranchZero);

  const LemmaSystem zero{LemmaArity::k3Sets, {0, 0, 0, 0}, {0, 0}, {0, 0},
                         {0, 0, 0, 0}, -1.0};
  EXPECT_EQ(check_lemma_3sets(zero).conclusion_branch, ConclusionBranch::kVacuous);

  // c0 and d10 both nonzero: c0·d10 = eta·c0·d10 cannot hold.
  const LemmaSystem clash{LemmaArity::k3Sets, {1, 1, 1, 1}, {1, 1}, {1, 1},
                          {1, 1, 1, 1}, -1.0};
  const auto r = check_lemma_3sets(clash);
  EXPECT_FALSE(r.hypothesis_holds);
  EXPECT_NE(r.conclusion_branch, ConclusionBranch::kViolated);
}

TEST(Lemma2Sets, Examples) {
  const LemmaSystem sys{LemmaArity::k2Sets, {0, 1}, {0, kI}, {0, 1}, {0, 1}, kI};
  EXPECT_EQ(lemma_hypothesis_residual(sys), 0.0);
  const auto report = check_lemma_2sets(sys);
  EXPECT_TRUE(report.hypothesis_holds);
  EXPECT_TRUE(report.nondegenerate);
  EXPECT_NE(report.conclusion_branch, ConclusionBranch::kViolated);
  EXPECT_NE(report.conclusion_branch, ConclusionBranch::kVacuous);

  // |+>|0> mapped to itself: a = c = (r, r), b = d = (1, 0), a1·b1 = 0.
  const double r = std::sqrt(0.5);
  const LemmaSystem self{LemmaArity::k2Sets, {r, r}, {1, 0}, {r, r}, {1, 0}, -1.0};
  const auto v = check_lemma_2sets(self);
  EXPECT_TRUE(v.hypothesis_holds);
  EXPECT_FALSE(v.nondegenerate);
  EXPECT_EQ(v.conclusion_branch, ConclusionBranch::kVacuous);
}

TEST(Lemma, ArgumentErrors) {
  auto sys = four_sets_example();
  sys.b.pop_back();
  EXPECT_THROW(check_lemma_4sets(sys), ArgumentError);
  auto near_one = four_sets_example();
  near_one.eta = 1.0;
  EXPECT_THROW(check_lemma(near_one), ArgumentError);
  EXPECT_THROW(check_lemma_3sets(four_sets_example()), ArgumentError);
  EXPECT_THROW(sample_lemma_system(LemmaArity::k2Sets, 1.0, 1), ArgumentError);
}

TEST(LemmaSampler, Deterministic) {
  const auto x = sample_lemma_system(LemmaArity::k3Sets, kI, 17);
  const auto y = sample_lemma_system(LemmaArity::k3Sets, kI, 17);
  EXPECT_EQ(x.a, y.a);
  EXPECT_EQ(x.b, y.b);
  EXPECT_EQ(x.c, y.c);
  EXPECT_EQ(x.d, y.d);
}

TEST(LemmaSampler, TwoSetsShape) {
  // a = (0, a1), c = (0, c1), d = (0, d1) forces b1 = eta·c1·d1 / a1.
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto sys = sample_lemma_system(LemmaArity::k2Sets, kI, seed);
    if (sys.a[0] == 0.0 && sys.c[0] == 0.0) {
      EXPECT_NEAR(std::abs(sys.b[1] - kI * sys.c[1] * sys.d[1] / sys.a[1]), 0,
                  1e-14);
    }
  }
}

class SamplerProperty
    : public ::testing::TestWithParam<std::tuple<LemmaArity, double>> {};

TEST_P(SamplerProperty, SatisfiesHypothesisAndConclusion) {
  const auto [arity, theta] = GetParam();
  const Amplitude eta = std::polar(1.0, theta);
  int branches[2] = {0, 0};
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto sys = sample_lemma_system(arity, eta, seed);
    ASSERT_LE(lemma_hypothesis_residual(sys), 1e-12) << "seed " << seed;
    const auto report = check_lemma(sys);
    ASSERT_TRUE(report.hypothesis_holds);
    ASSERT_TRUE(report.nondegenerate);
    ASSERT_TRUE(report.conclusion_branch == ConclusionBranch::kCBranchZero ||
                report.conclusion_branch == ConclusionBranch::kDBranchZero)
        << to_string(report.conclusion_branch);
    ++branches[static_cast<int>(report.conclusion_branch)];

    // Consequences of the hypothesis, by substitution.
    if (arity == LemmaArity::k4Sets) {
      EXPECT_LE(std::abs(sys.c[1] * sys.c[2] - eta * sys.c[0] * sys.c[3]), 1e-9);
      EXPECT_LE(std::abs(sys.d[1] * sys.d[2] - eta * sys.d[0] * sys.d[3]), 1e-9);
    }
    if (arity == LemmaArity::k3Sets) {
      EXPECT_LE(std::abs(sys.d[1] * sys.d[2] - eta * sys.d[0] * sys.d[3]), 1e-9);
    }
    EXPECT_LE(report.remark_residual, 1e-9);
  }
  EXPECT_GT(branches[0], 0);
  EXPECT_GT(branches[1], 0);
}

INSTANTIATE_TEST_SUITE_P(
    AllArities, SamplerProperty,
    ::testing::Combine(::testing::Values(LemmaArity::k4Sets, LemmaArity::k3Sets,
                                         LemmaArity::k2Sets),
                       ::testing::Values(std::numbers::pi, std::numbers::pi / 2,
                                         std::numbers::pi / 7)));

} // namespace
} // namespace czw
