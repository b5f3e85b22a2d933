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
#include <vector>

#include <Eigen/Dense>

#include "czw/state.hpp"
#include "czw/strings.hpp"

namespace czw {

/// Threshold on the second singular value (and on 2x2 minors) below which a
/// matricization counts as rank one.
inline constexpr double kSeparabilityTolerance = 1e-8;

using ComplexMatrix = Eigen::MatrixXcd;

/// An unordered split of the qubits into two disjoint sides; `a` is the side
/// that holds the smallest index of the set being split.
struct Bipartition {
  QubitSet a;
  QubitSet b;

  QubitSet universe() const { return a | b; }
  /// Both sides meet `s`.
  bool splits(const QubitSet &s) const {
    return !(a & s).empty() && !(b & s).empty();
  }
  /// "({1}|{2,3})"
  std::string to_string() const;

  friend bool operator==(const Bipartition &, const Bipartition &) = default;
};

struct RankVerdict {
  bool is_rank_one = false;
  /// Descending. Filled by the SVD detector only.
  std::vector<double> singular_values;
  /// Largest |2x2 minor|. Filled by the minor detector only.
  double max_minor = 0.0;
};

struct SeparationCertificate {
  Bipartition split;
  PureState factor_a;
  PureState factor_b;
  /// Largest per-amplitude error of factor_a ⊗ factor_b against the state.
  double residual = 0.0;
};

/// Every bipartition of [n] whose sides both meet S, each once, ordered by
/// |A| then lexicographically by A. Empty when |S| < 2.
std::vector<Bipartition> bipartitions_splitting(const QubitSet &s, int n);

/// Matrix with rows indexed by strings on A and columns by strings on B.
/// DomainError unless A ∪ B is the carrier.
ComplexMatrix reshape(const PureState &psi, const Bipartition &split);

/// Rank-one test by sigma_2 <= tol.
RankVerdict rank_one_svd(const ComplexMatrix &m, double tol);

/// Rank-one test by the largest 2x2 minor. Independent of the SVD path.
RankVerdict rank_one_minors(const ComplexMatrix &m, double tol);

/// Splits psi into unit factors on A and B whose tensor product equals psi.
/// The first nonzero entry of factor_a is real positive.
/// NotSeparableError when the matricization is not rank one at tol.
SeparationCertificate factorize(const PureState &psi, const Bipartition &split,
                                double tol = kSeparabilityTolerance);

/// First bipartition (in bipartitions_splitting order) across which psi
/// factors; nullopt means psi is S-entangled at tol.
/// ArgumentError when |S| < 2.
std::optional<SeparationCertificate>
find_separation(const PureState &psi, const QubitSet &s,
                double tol = kSeparabilityTolerance);

/// Second singular value across every bipartition splitting S, in
/// enumeration order. Used for diagnostics.
std::vector<std::pair<Bipartition, double>>
second_singular_values(const PureState &psi, const QubitSet &s);

/// Rebuilds the state from a certificate and reports the largest error.
double certificate_residual(const PureState &psi,
                            const SeparationCertificate &cert);

} // namespace czw
