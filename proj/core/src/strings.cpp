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

#include <algorithm>
#include <bit>

#include "czw/errors.hpp"

namespace czw {

namespace {

std::uint64_t bit_of(int index) {
  if (index < 1 || index > QubitSet::kMaxIndex) {
    throw DomainError("qubit index " + std::to_string(index) +
                      " outside [1, " + std::to_string(QubitSet::kMaxIndex) +
                      "]");
  }
  return std::uint64_t{1} << (index - 1);
}

} // namespace

QubitSet::QubitSet(std::initializer_list<int> members) {
  for (int m : members) {
    insert(m);
  }
}

QubitSet QubitSet::range(int n) {
  if (n < 0 || n > kMaxIndex) {
    throw DomainError("qubit count out of range: " + std::to_string(n));
  }
  return QubitSet(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

QubitSet QubitSet::from_members(std::span<const int> members) {
  QubitSet s;
  for (int m : members) {
    s.insert(m);
  }
  return s;
}

bool QubitSet::contains(int index) const {
  if (index < 1 || index > kMaxIndex) {
    return false;
  }
  return (mask_ & bit_of(index)) != 0;
}

void QubitSet::insert(int index) { mask_ |= bit_of(index); }

void QubitSet::erase(int index) { mask_ &= ~bit_of(index); }

int QubitSet::size() const { return std::popcount(mask_); }

int QubitSet::min() const {
  if (mask_ == 0) {
    throw DomainError("min() of an empty qubit set");
  }
  return std::countr_zero(mask_) + 1;
}

std::vector<int> QubitSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m) + 1);
  }
  return out;
}

std::string QubitSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int m : members()) {
    if (!first) {
      out += ',';
    }
    out += std::to_string(m);
    first = false;
  }
  out += '}';
  return out;
}

bool lexicographic_less(const QubitSet &a, const QubitSet &b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(),
                                      mb.end());
}

PartialString::PartialString(QubitSet domain, QubitSet ones)
    : domain_(domain), ones_(ones) {
  if (!ones_.is_subset_of(domain_)) {
    throw DomainError("string bits " + ones_.to_string() +
                      " outside domain " + domain_.to_string());
  }
}

PartialString PartialString::from_bits(std::string_view bits) {
  if (static_cast<int>(bits.size()) > QubitSet::kMaxIndex) {
    throw DomainError("bitstring longer than the supported qubit count");
  }
  QubitSet ones;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      ones.insert(static_cast<int>(i) + 1);
    } else if (bits[i] != '0') {
      throw DomainError("bitstring contains a character other than 0/1");
    }
  }
  return PartialString(QubitSet::range(static_cast<int>(bits.size())), ones);
}

PartialString PartialString::constant(QubitSet domain, int value) {
  return PartialString(domain, value != 0 ? domain : QubitSet{});
}

PartialString PartialString::from_index(std::uint64_t index, QubitSet carrier) {
  const auto members = carrier.members();
  const int width = static_cast<int>(members.size());
  if (width < 64 && (index >> width) != 0) {
    throw DomainError("basis index exceeds 2^|carrier|");
  }
  QubitSet ones;
  for (int t = 0; t < width; ++t) {
    if ((index >> (width - 1 - t)) & 1U) {
      ones.insert(members[static_cast<std::size_t>(t)]);
    }
  }
  return PartialString(carrier, ones);
}

int PartialString::at(int index) const {
  if (!domain_.contains(index)) {
    throw DomainError("qubit " + std::to_string(index) +
                      " not in string domain " + domain_.to_string());
  }
  return ones_.contains(index) ? 1 : 0;
}

std::uint64_t PartialString::index() const {
  std::uint64_t idx = 0;
  for (int m : domain_.members()) {
    idx = (idx << 1) | (ones_.contains(m) ? 1U : 0U);
  }
  return idx;
}

std::string PartialString::to_string() const {
  std::string out;
  for (int m : domain_.members()) {
    out += ones_.contains(m) ? '1' : '0';
  }
  return out;
}

std::string PartialString::describe() const {
  std::string out = "{";
  bool first = true;
  for (int m : domain_.members()) {
    if (!first) {
      out += ',';
    }
    out += std::to_string(m) + ':' + (ones_.contains(m) ? '1' : '0');
    first = false;
  }
  out += '}';
  return out;
}

PartialString restrict(const PartialString &x, const QubitSet &subset) {
  if (!subset.is_subset_of(x.domain())) {
    throw DomainError("cannot restrict string on " + x.domain().to_string() +
                      " to " + subset.to_string());
  }
  return PartialString(subset, x.ones() & subset);
}

PartialString unite(const PartialString &y, const PartialString &z) {
  if (!y.domain().disjoint_with(z.domain())) {
    throw DomainError("union of strings with overlapping domains " +
                      y.domain().to_string() + " and " +
                      z.domain().to_string());
  }
  return PartialString(y.domain() | z.domain(), y.ones() | z.ones());
}

bool is_test_string(const PartialString &x, std::span<const QubitSet> quads) {
  return std::all_of(quads.begin(), quads.end(), [&](const QubitSet &quad) {
    return quad.empty() || !(quad & x.zeros()).empty();
  });
}

FamilyStrings build_family(const PartialString &x, const PartialString &u,
                           const QubitSet &a, const QubitSet &b,
                           const QubitSet &c, const QubitSet &d) {
  const QubitSet universe = x.domain();
  if (u.domain() != universe) {
    throw DomainError("x and u must share a domain");
  }
  const auto is_bipartition = [&](const QubitSet &p, const QubitSet &q) {
    return p.disjoint_with(q) && (p | q) == universe;
  };
  if (!is_bipartition(a, b) || !is_bipartition(c, d)) {
    throw DomainError("build_family needs two bipartitions of " +
                      universe.to_string());
  }

  // Region R is split by the other bipartition into (first, second); the two
  // indices pick u over x on those pieces.
  const auto piece = [&](const QubitSet &region, const QubitSet &first,
                         const QubitSet &second, int j, int k) {
    return unite(restrict(j != 0 ? u : x, region & first),
                 restrict(k != 0 ? u : x, region & second));
  };

  FamilyStrings family;
  const std::array<QubitSet, 4> regions{a, b, c, d};
  for (int r = 0; r < 4; ++r) {
    const bool splits_cd = r < 2;
    const QubitSet &first = splits_cd ? c : a;
    const QubitSet &second = splits_cd ? d : b;
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        family.strings[static_cast<std::size_t>(r)]
                      [static_cast<std::size_t>(2 * j + k)] =
            piece(regions[static_cast<std::size_t>(r)], first, second, j, k);
      }
    }
  }
  return family;
}

} // namespace czw
