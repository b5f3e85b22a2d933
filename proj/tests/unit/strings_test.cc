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

#include "czw/strings.hpp"

#include <gtest/gtest.h>

#include "czw/errors.hpp"
#include "oracles.hpp"

namespace czw {
namespace {

using testing::random_string;
using testing::random_subset;

TEST(QubitSet, MembersAscending) {
  QubitSet s{4, 1, 3};
  EXPECT_EQ(s.members(), (std::vector<int>{1, 3, 4}));
  EXPECT_EQ(s.size(), 3);
  EXPECT_EQ(s.min(), 1);
  EXPECT_EQ(s.to_string(), "{1,3,4}");
  EXPECT_EQ(QubitSet::range(3), (QubitSet{1, 2, 3}));
}

TEST(QubitSet, RejectsOutOfRangeIndex) {
  EXPECT_THROW(QubitSet{0}, DomainError);
  EXPECT_THROW(QubitSet{64}, DomainError);
  EXPECT_THROW(QubitSet{}.min(), DomainError);
}

TEST(QubitSet, SetAlgebra) {
  const QubitSet a{1, 2, 3};
  const QubitSet b{3, 4};
  EXPECT_EQ(a | b, (QubitSet{1, 2, 3, 4}));
  EXPECT_EQ(a & b, (QubitSet{3}));
  EXPECT_EQ(a - b, (QubitSet{1, 2}));
  EXPECT_TRUE((QubitSet{1, 2}).is_subset_of(a));
  EXPECT_FALSE(a.disjoint_with(b));
  EXPECT_TRUE(lexicographic_less(QubitSet{1, 2}, QubitSet{1, 3}));
  EXPECT_TRUE(lexicographic_less(QubitSet{1}, QubitSet{1, 3}));
}

TEST(PartialString, FromBitsAndIndex) {
  const auto x = PartialString::from_bits("1010");
  EXPECT_EQ(x.domain(), QubitSet::range(4));
  EXPECT_EQ(x.at(1), 1);
  EXPECT_EQ(x.at(2), 0);
  // Qubit 1 is the most significant bit.
  EXPECT_EQ(x.index(), 0b1010U);
  EXPECT_EQ(PartialString::from_index(0b1010, QubitSet::range(4)), x);
  EXPECT_EQ(x.to_string(), "1010");
  EXPECT_THROW(x.at(5), DomainError);
  EXPECT_THROW(PartialString::from_bits("10a"), DomainError);
  EXPECT_THROW(PartialString(QubitSet{1}, QubitSet{2}), DomainError);
}

TEST(Restrict, Examples) {
  const auto x = PartialString::from_bits("1010");
  const auto r = restrict(x, QubitSet{2, 4});
  EXPECT_EQ(r.domain(), (QubitSet{2, 4}));
  EXPECT_EQ(r.at(2), 0);
  EXPECT_EQ(r.at(4), 0);

  const auto y = PartialString::from_bits("11");
  EXPECT_EQ(restrict(y, QubitSet{1, 2}), y);

  const auto ones = PartialString::constant(QubitSet::range(3), 1);
  const auto empty = restrict(ones, QubitSet{});
  EXPECT_TRUE(empty.domain().empty());
  EXPECT_EQ(empty, PartialString{});
}

TEST(Restrict, OutsideDomainIsDomainError) {
  EXPECT_THROW(restrict(PartialString::from_bits("10"), QubitSet{3}),
               DomainError);
}

TEST(Unite, Examples) {
  const PartialString y(QubitSet{1}, QubitSet{1});
  const PartialString z(QubitSet{2}, QubitSet{});
  const auto yz = unite(y, z);
  EXPECT_EQ(yz, PartialString::from_bits("10"));

  const auto w = PartialString::from_bits("101");
  EXPECT_EQ(unite(PartialString{}, w), w);
  EXPECT_THROW(unite(w, y), DomainError);
}

TEST(Unite, ReassemblesAnyBipartition) {
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(8));
    const auto universe = QubitSet::range(n);
    const auto x = random_string(rng, universe);
    const auto a = random_subset(rng, universe);
    EXPECT_EQ(unite(restrict(x, a), restrict(x, universe - a)), x);
  }
}

TEST(TestString, Examples) {
  const std::vector<QubitSet> quads{{1}, {2}, {3}, {4}};
  EXPECT_TRUE(is_test_string(PartialString::from_bits("0000"), quads));
  EXPECT_FALSE(is_test_string(PartialString::from_bits("0111"), quads));

  const std::vector<QubitSet> with_empty{{1}, {2}, {}, {4}};
  EXPECT_FALSE(is_test_string(PartialString::from_bits("0011"), with_empty));
  // Qubit 2 is 1 and {2} is nonempty.
  EXPECT_FALSE(is_test_string(PartialString::from_bits("0100"), with_empty));
  // The empty third set imposes nothing, so qubit 3 may be 1.
  EXPECT_TRUE(is_test_string(PartialString::from_bits("0010"), with_empty));
}

TEST(TestString, MatchesEnumeration) {
  // Independent check: count zeros per nonempty quad by hand.
  const std::vector<QubitSet> quads{{1, 2}, {3}, {}, {4, 5}};
  for (const auto &x : testing::all_strings(QubitSet::range(5))) {
    bool expected = true;
    for (const auto &quad : quads) {
      if (quad.empty()) {
        continue;
      }
      int zeros = 0;
      for (int i : quad.members()) {
        zeros += x.at(i) == 0 ? 1 : 0;
      }
      expected = expected && zeros > 0;
    }
    EXPECT_EQ(is_test_string(x, quads), expected) << x.to_string();
  }
}

class FamilyFixture : public ::testing::Test {
protected:
  const QubitSet a{1, 2}, b{3, 4}, c{1, 3}, d{2, 4};
  const PartialString x = PartialString::from_bits("0000");
  const PartialString u = PartialString::from_bits("1111");
};

TEST_F(FamilyFixture, Examples) {
  const auto family = build_family(x, u, a, b, c, d);
  // x on A∩C = {1}, u on A∩D = {2}
  EXPECT_EQ(family.at(Region::A, 0, 1), PartialString(QubitSet{1, 2}, QubitSet{2}));
  // u on C∩A = {1}, x on C∩B = {3}
  EXPECT_EQ(family.at(Region::C, 1, 0), PartialString(QubitSet{1, 3}, QubitSet{1}));
  // Built from u on D∩B, not from the all-ones string.
  EXPECT_EQ(family.at(Region::D, 0, 1), PartialString(QubitSet{2, 4}, QubitSet{4}));
}

TEST_F(FamilyFixture, ObservationTwoOnAllSixteenCombinations) {
  const auto family = build_family(x, u, a, b, c, d);
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      for (int l = 0; l < 2; ++l) {
        for (int m = 0; m < 2; ++m) {
          EXPECT_EQ(unite(family.at(Region::A, j, k), family.at(Region::B, l, m)),
                    unite(family.at(Region::C, j, l), family.at(Region::D, k, m)))
              << j << k << l << m;
        }
      }
    }
  }
}

TEST_F(FamilyFixture, RejectsNonBipartitions) {
  EXPECT_THROW(build_family(x, u, QubitSet{1, 2}, QubitSet{2, 3, 4}, c, d),
               DomainError);
  EXPECT_THROW(build_family(x, u, a, b, QubitSet{1}, QubitSet{2, 4}),
               DomainError);
}

TEST(FamilyProperty, ObservationsHoldOnRandomInstances) {
  Rng rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(8));
    const auto universe = QubitSet::range(n);
    const auto x = random_string(rng, universe);
    // u with arbitrary bits: the identities are purely combinatorial.
    const auto u = random_string(rng, universe);
    const auto a = random_subset(rng, universe);
    const auto c = random_subset(rng, universe);
    const auto b = universe - a;
    const auto d = universe - c;
    const auto family = build_family(x, u, a, b, c, d);

    ASSERT_EQ(unite(family.at(Region::A, 0, 0), family.at(Region::B, 0, 0)), x);
    ASSERT_EQ(unite(family.at(Region::C, 0, 0), family.at(Region::D, 0, 0)), x);
    const std::array<QubitSet, 4> regions{a, b, c, d};
    for (int r = 0; r < 4; ++r) {
      const auto region = static_cast<Region>(r);
      ASSERT_EQ(family.at(region, 1, 1), restrict(u, regions[r]));
      ASSERT_EQ(family.at(region, 0, 0), restrict(x, regions[r]));
    }
    for (int idx = 0; idx < 16; ++idx) {
      const int j = idx >> 3 & 1, k = idx >> 2 & 1, l = idx >> 1 & 1, m = idx & 1;
      ASSERT_EQ(unite(family.at(Region::A, j, k), family.at(Region::B, l, m)),
                unite(family.at(Region::C, j, l), family.at(Region::D, k, m)));
    }
  }
}

} // namespace
} // namespace czw
