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

#include "czw/separability.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "czw/errors.hpp"
#include "czw/gate.hpp"
#include "oracles.hpp"

namespace czw {
namespace {

const double kHalfRoot2 = std::sqrt(0.5);

PureState cz_plus_plus() {
  return PureState::make(QubitSet{1, 2}, {0.5, 0.5, 0.5, -0.5});
}

TEST(Bipartitions, Examples) {
  const auto two = bipartitions_splitting(QubitSet{1, 2}, 2);
  ASSERT_EQ(two.size(), 1U);
  EXPECT_EQ(two[0], (Bipartition{{1}, {2}}));

  const auto three = bipartitions_splitting(QubitSet{1, 2}, 3);
  ASSERT_EQ(three.size(), 2U);
  EXPECT_EQ(three[0], (Bipartition{{1}, {2, 3}}));
  EXPECT_EQ(three[1], (Bipartition{{1, 3}, {2}}));

  const auto full = bipartitions_splitting(QubitSet{1, 2, 3}, 3);
  ASSERT_EQ(full.size(), 3U);
  EXPECT_EQ(full[0], (Bipartition{{1}, {2, 3}}));
  EXPECT_EQ(full[1], (Bipartition{{1, 2}, {3}}));
  EXPECT_EQ(full[2], (Bipartition{{1, 3}, {2}}));

  EXPECT_TRUE(bipartitions_splitting(QubitSet{2}, 3).empty());
}

TEST(Bipartitions, CountMatchesBruteForce) {
  for (int n = 2; n <= 6; ++n) {
    for (std::uint64_t mask = 0; mask < (1U << n); ++mask) {
      const auto s = QubitSet::from_mask(mask);
      // Ordered pairs (A, complement) with both sides meeting S, halved.
      int ordered = 0;
      for (std::uint64_t a = 0; a < (1U << n); ++a) {
        const auto side = QubitSet::from_mask(a);
        const auto other = QubitSet::range(n) - side;
        ordered += (!(side & s).empty() && !(other & s).empty()) ? 1 : 0;
      }
      const auto splits = bipartitions_splitting(s, n);
      EXPECT_EQ(static_cast<int>(splits.size()), ordered / 2);
      for (const auto &split : splits) {
        EXPECT_TRUE(split.a.contains(s.min()));
        EXPECT_TRUE(split.splits(s));
      }
    }
  }
}

TEST(Reshape, Examples) {
  const auto m = reshape(cz_plus_plus(), {{1}, {2}});
  EXPECT_EQ(m(0, 0), Amplitude(0.5));
  EXPECT_EQ(m(0, 1), Amplitude(0.5));
  EXPECT_EQ(m(1, 0), Amplitude(0.5));
  EXPECT_EQ(m(1, 1), Amplitude(-0.5));

  const auto plus_zero =
      PureState::make(QubitSet{1, 2}, {kHalfRoot2, 0, kHalfRoot2, 0});
  const auto p = reshape(plus_zero, {{1}, {2}});
  EXPECT_NEAR(p(0, 0).real(), kHalfRoot2, 1e-15);
  EXPECT_NEAR(p(1, 0).real(), kHalfRoot2, 1e-15);
  EXPECT_EQ(p(0, 1), Amplitude(0.0));

  std::vector<Amplitude> ghz(8);
  ghz[0] = ghz[7] = kHalfRoot2;
  const auto g = reshape(PureState::make(QubitSet::range(3), ghz),
                         {{2}, {1, 3}});
  ASSERT_EQ(g.rows(), 2);
  ASSERT_EQ(g.cols(), 4);
  // Row y = x_2, column = (x_1 x_3).
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 4; ++c) {
      const double expected = (r == 0 && c == 0) || (r == 1 && c == 3)
                                  ? kHalfRoot2
                                  : 0.0;
      EXPECT_NEAR(std::abs(g(r, c) - expected), 0.0, 1e-15) << r << c;
    }
  }
  EXPECT_THROW(reshape(cz_plus_plus(), {{1}, {3}}), DomainError);
}

TEST(RankOne, ScaledHadamardIsRankTwo) {
  const auto m = reshape(cz_plus_plus(), {{1}, {2}});
  const auto [s1, s2] =
      testing::singular_values_2x2(m(0, 0), m(0, 1), m(1, 0), m(1, 1));
  const auto svd = rank_one_svd(m, kSeparabilityTolerance);
  EXPECT_FALSE(svd.is_rank_one);
  ASSERT_EQ(svd.singular_values.size(), 2U);
  EXPECT_NEAR(svd.singular_values[0], s1, 1e-14);
  EXPECT_NEAR(svd.singular_values[1], s2, 1e-14);
  EXPECT_NEAR(s2, 0.70711, 1e-5);

  const auto minors = rank_one_minors(m, kSeparabilityTolerance);
  EXPECT_FALSE(minors.is_rank_one);
  EXPECT_NEAR(minors.max_minor, 0.5, 1e-15);
}

TEST(RankOne, IdenticalColumns) {
  ComplexMatrix m(2, 2);
  m << kHalfRoot2, 0, kHalfRoot2, 0;
  const auto svd = rank_one_svd(m, kSeparabilityTolerance);
  EXPECT_TRUE(svd.is_rank_one);
  EXPECT_NEAR(svd.singular_values[0], 1.0, 1e-15);
  EXPECT_NEAR(svd.singular_values[1], 0.0, 1e-15);
  EXPECT_TRUE(rank_one_minors(m, kSeparabilityTolerance).is_rank_one);
}

ComplexMatrix outer(const std::vector<Amplitude> &l,
                    const std::vector<Amplitude> &r) {
  ComplexMatrix m(static_cast<Eigen::Index>(l.size()),
                  static_cast<Eigen::Index>(r.size()));
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          l[i] * r[j];
    }
  }
  return m;
}

std::vector<Amplitude> unit_vector(Rng &rng, std::size_t size) {
  auto v = testing::random_vector(rng, size);
  double n2 = 0;
  for (auto a : v) {
    n2 += std::norm(a);
  }
  for (auto &a : v) {
    a /= std::sqrt(n2);
  }
  return v;
}

TEST(RankOne, OuterProductOfUnitVectors) {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = outer(unit_vector(rng, 1U << (1 + rng.below(3))),
                         unit_vector(rng, 1U << (1 + rng.below(3))));
    const auto svd = rank_one_svd(m, kSeparabilityTolerance);
    EXPECT_TRUE(svd.is_rank_one);
    EXPECT_LE(svd.singular_values[1], 1e-12);
    EXPECT_LE(rank_one_minors(m, kSeparabilityTolerance).max_minor, 1e-14);
  }
}

TEST(DetectorAgreement, MarginSeparatedInstances) {
  Rng rng(1234);
  const double tol = kSeparabilityTolerance;
  int compared = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto m = outer(unit_vector(rng, 1U << (1 + rng.below(3))),
                         unit_vector(rng, 1U << (1 + rng.below(3))));
    ASSERT_EQ(rank_one_svd(m, tol).is_rank_one,
              rank_one_minors(m, tol).is_rank_one);
    ++compared;
  }
  for (int trial = 0; trial < 1000;) {
    const std::size_t rows = 1U << (1 + rng.below(2));
    const std::size_t cols = 1U << (1 + rng.below(2));
    auto v = unit_vector(rng, rows * cols);
    ComplexMatrix m(static_cast<Eigen::Index>(rows),
                    static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < v.size(); ++i) {
      m(static_cast<Eigen::Index>(i / cols), static_cast<Eigen::Index>(i % cols)) = v[i];
    }
    const auto svd = rank_one_svd(m, tol);
    const double s2 = svd.singular_values[1];
    if (s2 > tol / 10 && s2 < 10 * tol) {
      continue;
    }
    ASSERT_EQ(svd.is_rank_one, rank_one_minors(m, tol).is_rank_one);
    ++compared;
    ++trial;
  }
  EXPECT_EQ(compared, 2000);
}

TEST(Factorize, AlreadyFactored) {
  const auto plus_zero =
      PureState::make(QubitSet{1, 2}, {kHalfRoot2, 0, kHalfRoot2, 0});
  const auto cert = factorize(plus_zero, {{1}, {2}});
  EXPECT_NEAR(std::abs(cert.factor_a[0] - kHalfRoot2), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(cert.factor_a[1] - kHalfRoot2), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(cert.factor_b[0] - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(cert.factor_b[1]), 0.0, 1e-15);
  EXPECT_LE(cert.residual, 1e-15);
}

TEST(Factorize, EntangledIsNotSeparable) {
  EXPECT_THROW(factorize(cz_plus_plus(), {{1}, {2}}), NotSeparableError);
}

TEST(Factorize, RoundTripRecoversFactorsUpToPhase) {
  Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(5));
    const auto universe = QubitSet::range(n);
    QubitSet a = testing::random_subset(rng, universe);
    if (a.empty() || a == universe) {
      a = QubitSet{n};
    }
    const auto r = testing::random_state(rng, a);
    const auto s = testing::random_state(rng, universe - a);
    const auto psi = tensor(r, s);
    const Bipartition split{a, universe - a};
    const auto cert = factorize(psi, split);
    EXPECT_LE(cert.residual, 1e-10);
    // Phase convention: first nonzero entry of factor_a is real positive.
    EXPECT_NEAR(cert.factor_a[0].imag(), 0.0, 1e-14);
    EXPECT_GT(cert.factor_a[0].real(), 0.0);
    // |<r|factor_a>| = 1 means equal up to phase.
    EXPECT_NEAR(std::abs(inner_product(r, cert.factor_a)), 1.0, 1e-10);
    EXPECT_NEAR(std::abs(inner_product(s, cert.factor_b)), 1.0, 1e-10);
  }
}

TEST(FindSeparation, Examples) {
  const auto plus_zero =
      PureState::make(QubitSet{1, 2}, {kHalfRoot2, 0, kHalfRoot2, 0});
  const auto cert = find_separation(plus_zero, QubitSet{1, 2});
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->split, (Bipartition{{1}, {2}}));

  EXPECT_FALSE(find_separation(cz_plus_plus(), QubitSet{1, 2}).has_value());

  // CZ|++> on qubits 1,2 with |0> on qubit 3: only ({1,2}|{3}) factors, and
  // it does not split S = {1,2}.
  const auto three =
      tensor(cz_plus_plus(), PureState::make(QubitSet{3}, {1.0, 0.0}));
  EXPECT_FALSE(find_separation(three, QubitSet{1, 2}).has_value());
  EXPECT_TRUE(find_separation(three, QubitSet{1, 3}).has_value());

  EXPECT_THROW(find_separation(plus_zero, QubitSet{1}), ArgumentError);
}

TEST(FindSeparationProperty, ProductsAcrossSplittingBipartitions) {
  Rng rng(555);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(4));
    QubitSet s;
    while (s.size() < 2) {
      s = testing::random_subset(rng, QubitSet::range(n));
    }
    const auto splits = bipartitions_splitting(s, n);
    const auto split = splits[rng.below(splits.size())];
    const auto psi = tensor(testing::random_state(rng, split.a),
                            testing::random_state(rng, split.b));
    const auto cert = find_separation(psi, s);
    ASSERT_TRUE(cert.has_value());
    EXPECT_LE(certificate_residual(psi, *cert), 1e-10);

    // Global phase does not change the verdict or the chosen split.
    const Amplitude phase = rng.unit_phase();
    std::vector<Amplitude> rotated(psi.amplitudes().begin(),
                                   psi.amplitudes().end());
    for (auto &a : rotated) {
      a *= phase;
    }
    const auto cert2 =
        find_separation(PureState::make(psi.carrier(), rotated), s);
    ASSERT_TRUE(cert2.has_value());
    EXPECT_EQ(cert2->split, cert->split);

    // Any S' ⊆ S still split by the certificate is certified by it too.
    for (int i : s.members()) {
      QubitSet smaller = s;
      smaller.erase(i);
      if (cert->split.splits(smaller)) {
        EXPECT_TRUE(find_separation(psi, smaller).has_value());
      }
    }
  }
}

TEST(FindSeparationProperty, HaarStatesAreEntangled) {
  Rng rng(8080);
  for (int trial = 0; trial < 200; ++trial) {
    const auto psi = testing::random_state(rng, QubitSet::range(4));
    EXPECT_FALSE(find_separation(psi, QubitSet::range(4)).has_value());
  }
}

} // namespace
} // namespace czw
