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

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace czw {

/// A set of 1-based qubit indices, stored as a bitmask (bit i-1 for qubit i).
class QubitSet {
public:
  static constexpr int kMaxIndex = 63;

  QubitSet() = default;
  QubitSet(std::initializer_list<int> members);

  /// The set {1, ..., n}.
  static QubitSet range(int n);
  static QubitSet from_mask(std::uint64_t mask) { return QubitSet(mask); }
  static QubitSet from_members(std::span<const int> members);

  bool contains(int index) const;
  void insert(int index);
  void erase(int index);

  int size() const;
  bool empty() const { return mask_ == 0; }
  /// Smallest member; DomainError on the empty set.
  int min() const;
  /// Members in ascending order.
  std::vector<int> members() const;
  std::uint64_t mask() const { return mask_; }

  bool is_subset_of(const QubitSet &other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  bool disjoint_with(const QubitSet &other) const {
    return (mask_ & other.mask_) == 0;
  }

  friend QubitSet operator|(QubitSet a, QubitSet b) {
    return QubitSet(a.mask_ | b.mask_);
  }
  friend QubitSet operator&(QubitSet a, QubitSet b) {
    return QubitSet(a.mask_ & b.mask_);
  }
  /// Set difference.
  friend QubitSet operator-(QubitSet a, QubitSet b) {
    return QubitSet(a.mask_ & ~b.mask_);
  }
  friend bool operator==(QubitSet a, QubitSet b) = default;

  /// "{1,3,4}"
  std::string to_string() const;

private:
  explicit QubitSet(std::uint64_t mask) : mask_(mask) {}
  std::uint64_t mask_ = 0;
};

/// Lexicographic order on ascending member lists.
bool lexicographic_less(const QubitSet &a, const QubitSet &b);

/// A 0/1 assignment on an arbitrary set of qubit indices.
///
/// Bits are held in the same qubit-indexed mask layout as QubitSet, so a bit
/// is set only for domain members assigned 1. Equality compares domain and
/// bits.
class PartialString {
public:
  PartialString() = default;
  /// `ones` must be a subset of `domain`.
  PartialString(QubitSet domain, QubitSet ones);

  /// Parses "0110" as a string on {1, ..., length}.
  static PartialString from_bits(std::string_view bits);
  /// The constant string with the given value on `domain`.
  static PartialString constant(QubitSet domain, int value);
  /// The string on `carrier` for a basis index (smallest qubit = most
  /// significant bit).
  static PartialString from_index(std::uint64_t index, QubitSet carrier);

  const QubitSet &domain() const { return domain_; }
  const QubitSet &ones() const { return ones_; }
  QubitSet zeros() const { return domain_ - ones_; }

  /// Bit at qubit `index`; DomainError outside the domain.
  int at(int index) const;
  /// Basis index over the string's own domain.
  std::uint64_t index() const;

  /// Bits in ascending qubit order, e.g. "1010".
  std::string to_string() const;
  /// "{2:0,4:1}"
  std::string describe() const;

  friend bool operator==(const PartialString &, const PartialString &) = default;

private:
  QubitSet domain_;
  QubitSet ones_;
};

/// x restricted to T. DomainError unless T is a subset of domain(x).
PartialString restrict(const PartialString &x, const QubitSet &subset);

/// The unique string extending both y and z. DomainError if the domains overlap.
PartialString unite(const PartialString &y, const PartialString &z);

/// True iff every nonempty set among `quads` holds an index where x is 0.
bool is_test_string(const PartialString &x, std::span<const QubitSet> quads);

enum class Region { A = 0, B = 1, C = 2, D = 3 };

/// The sixteen strings x^R_{jk}. For R in {A, B} index j selects u over x on
/// R∩C and k on R∩D; for R in {C, D}, j acts on R∩A and k on R∩B.
struct FamilyStrings {
  std::array<std::array<PartialString, 4>, 4> strings;

  const PartialString &at(Region region, int j, int k) const {
    return strings[static_cast<int>(region)][2 * j + k];
  }
};

/// Builds the family for strings x, u on [n] and bipartitions {A,B}, {C,D}.
/// DomainError if {A,B} or {C,D} is not a bipartition of the common domain.
FamilyStrings build_family(const PartialString &x, const PartialString &u,
                           const QubitSet &a, const QubitSet &b,
                           const QubitSet &c, const QubitSet &d);

} // namespace czw
