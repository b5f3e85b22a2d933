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

#include <algorithm>
#include <cmath>
#include <string>

#include "czw/errors.hpp"

namespace czw {

namespace {

std::vector<Bipartition> splits_of(const QubitSet &universe,
                                   const QubitSet &s) {
  std::vector<Bipartition> out;
  if (s.size() < 2) {
    return out;
  }
  const auto members = universe.members();
  const int anchor = s.min();
  const std::uint64_t count = std::uint64_t{1} << members.size();
  for (std::uint64_t pick = 0; pick < count; ++pick) {
    QubitSet a;
    for (std::size_t t = 0; t < members.size(); ++t) {
      if ((pick >> t) & 1U) {
        a.insert(members[t]);
      }
    }
    if (!a.contains(anchor)) {
      continue;
    }
    const Bipartition split{a, universe - a};
    if (split.splits(s)) {
      out.push_back(split);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Bipartition &l, const Bipartition &r) {
              if (l.a.size() != r.a.size()) {
                return l.a.size() < r.a.size();
              }
              return lexicographic_less(l.a, r.a);
            });
  return out;
}

void require_splits_carrier(const PureState &psi, const Bipartition &split) {
  if (!split.a.disjoint_with(split.b) || split.universe() != psi.carrier()) {
    throw DomainError("bipartition " + split.to_string() +
                      " does not partition carrier " +
                      psi.carrier().to_string());
  }
}

} // namespace

std::string Bipartition::to_string() const {
  return "(" + a.to_string() + "|" + b.to_string() + ")";
}

std::vector<Bipartition> bipartitions_splitting(const QubitSet &s, int n) {
  const QubitSet universe = QubitSet::range(n);
  if (!s.is_subset_of(universe)) {
    throw DomainError("set " + s.to_string() + " not inside [" +
                      std::to_string(n) + "]");
  }
  return splits_of(universe, s);
}

ComplexMatrix reshape(const PureState &psi, const Bipartition &split) {
  require_splits_carrier(psi, split);
  const std::uint64_t row_mask = position_mask(psi.carrier(), split.a);
  const std::uint64_t col_mask = position_mask(psi.carrier(), split.b);
  ComplexMatrix m(Eigen::Index{1} << split.a.size(),
                  Eigen::Index{1} << split.b.size());
  for (std::uint64_t x = 0; x < psi.dimension(); ++x) {
    m(static_cast<Eigen::Index>(extract_bits(x, row_mask)),
      static_cast<Eigen::Index>(extract_bits(x, col_mask))) = psi[x];
  }
  return m;
}

RankVerdict rank_one_svd(const ComplexMatrix &m, double tol) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto &sv = svd.singularValues();
  RankVerdict verdict;
  verdict.singular_values.assign(sv.data(), sv.data() + sv.size());
  verdict.is_rank_one = sv.size() < 2 || sv(1) <= tol;
  return verdict;
}

RankVerdict rank_one_minors(const ComplexMatrix &m, double tol) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = i + 1; k < m.rows(); ++k) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index l = j + 1; l < m.cols(); ++l) {
          worst = std::max(worst,
                           std::abs(m(i, j) * m(k, l) - m(i, l) * m(k, j)));
        }
      }
    }
  }
  RankVerdict verdict;
  verdict.max_minor = worst;
  verdict.is_rank_one = worst <= tol;
  return verdict;
}

SeparationCertificate factorize(const PureState &psi, const Bipartition &split,
                                double tol) {
  const ComplexMatrix m = reshape(psi, split);
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU |
                                             Eigen::ComputeThinV);
  const auto &sv = svd.singularValues();
  if (sv.size() >= 2 && sv(1) > tol) {
    throw NotSeparableError("state is not a product across " +
                            split.to_string() +
                            " (sigma_2 = " + std::to_string(sv(1)) + ")");
  }

  Eigen::VectorXcd left = svd.matrixU().col(0);
  // Projecting onto the dominant left vector gives the best right factor.
  Eigen::VectorXcd right = m.transpose() * left.conjugate();

  for (Eigen::Index i = 0; i < left.size(); ++i) {
    if (std::abs(left(i)) > tol) {
      const std::complex<double> phase = left(i) / std::abs(left(i));
      left /= phase;
      right *= phase;
      break;
    }
  }

  const auto to_vector = [](const Eigen::VectorXcd &v) {
    return std::vector<Amplitude>(v.data(), v.data() + v.size());
  };
  SeparationCertificate cert{
      split,
      PureState::make(split.a, to_vector(left), true),
      PureState::make(split.b, to_vector(right), true),
      0.0,
  };
  cert.residual = certificate_residual(psi, cert);
  return cert;
}

std::optional<SeparationCertificate>
find_separation(const PureState &psi, const QubitSet &s, double tol) {
  if (s.size() < 2) {
    throw ArgumentError("S-separability needs |S| >= 2, got " + s.to_string());
  }
  if (!s.is_subset_of(psi.carrier())) {
    throw DomainError("set " + s.to_string() + " not inside carrier " +
                      psi.carrier().to_string());
  }
  for (const auto &split : splits_of(psi.carrier(), s)) {
    if (rank_one_svd(reshape(psi, split), tol).is_rank_one) {
      return factorize(psi, split, tol);
    }
  }
  return std::nullopt;
}

std::vector<std::pair<Bipartition, double>>
second_singular_values(const PureState &psi, const QubitSet &s) {
  std::vector<std::pair<Bipartition, double>> out;
  for (const auto &split : splits_of(psi.carrier(), s)) {
    const auto verdict = rank_one_svd(reshape(psi, split), 0.0);
    out.emplace_back(split, verdict.singular_values.size() >= 2
                                ? verdict.singular_values[1]
                                : 0.0);
  }
  return out;
}

double certificate_residual(const PureState &psi,
                            const SeparationCertificate &cert) {
  return max_abs_difference(psi, tensor(cert.factor_a, cert.factor_b));
}

} // namespace czw
