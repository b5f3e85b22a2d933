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

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <string>
#include <tuple>

#include "czw/errors.hpp"
#include "czw/gate.hpp"
#include "czw/random.hpp"

namespace czw {

const char *to_string(ConclusionBranch branch) {
  switch (branch) {
  case ConclusionBranch::kCBranchZero:
    return "c_branch_zero";
  case ConclusionBranch::kDBranchZero:
    return "d_branch_zero";
  case ConclusionBranch::kVacuous:
    return "vacuous";
  case ConclusionBranch::kViolated:
    return "violated";
  }
  return "?";
}

namespace {

constexpr int ix(int j, int k) { return 2 * j + k; }

void require_shape(const LemmaSystem &sys, LemmaArity arity, std::size_t na,
                   std::size_t nb, std::size_t nc, std::size_t nd) {
  if (sys.arity != arity || sys.a.size() != na || sys.b.size() != nb ||
      sys.c.size() != nc || sys.d.size() != nd) {
    throw ArgumentError("lemma system shape does not match arity " +
                        std::to_string(static_cast<int>(arity)));
  }
  if (!(std::abs(sys.eta - 1.0) > kEtaTolerance)) {
    throw ArgumentError("lemma needs eta != 1");
  }
}

bool is_zero(Amplitude v, double tol) { return std::abs(v) <= 10.0 * tol; }

bool all_zero(std::initializer_list<Amplitude> values, double tol) {
  return std::all_of(values.begin(), values.end(),
                     [&](Amplitude v) { return is_zero(v, tol); });
}

double max_abs(std::initializer_list<Amplitude> values) {
  double worst = 0.0;
  for (auto v : values) {
    worst = std::max(worst, std::abs(v));
  }
  return worst;
}

// Shared tail: choose the branch once hypothesis residual and the
// conclusion products are known.
void conclude(LemmaReport &report, double tol, bool c_zero, bool d_zero) {
  report.hypothesis_holds = report.max_residual <= tol;
  if (!report.hypothesis_holds || !report.nondegenerate) {
    report.conclusion_branch = ConclusionBranch::kVacuous;
    return;
  }
  const bool products_vanish = report.conclusion_residual <= 10.0 * tol;
  if (c_zero && products_vanish) {
    report.conclusion_branch = ConclusionBranch::kCBranchZero;
  } else if (d_zero && products_vanish) {
    report.conclusion_branch = ConclusionBranch::kDBranchZero;
  } else {
    report.conclusion_branch = ConclusionBranch::kViolated;
  }
}

} // namespace

LemmaReport check_lemma_4sets(const LemmaSystem &sys, double tol) {
  require_shape(sys, LemmaArity::k4Sets, 4, 4, 4, 4);
  const auto &[a, b, c, d, eta] =
      std::tie(sys.a, sys.b, sys.c, sys.d, sys.eta);

  LemmaReport report;
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      for (int l = 0; l < 2; ++l) {
        for (int m = 0; m < 2; ++m) {
          const Amplitude factor = (j & k & l & m) ? eta : Amplitude{1.0};
          const double r =
              std::abs(a[ix(j, k)] * b[ix(l, m)] -
                       factor * c[ix(j, l)] * d[ix(k, m)]);
          report.max_residual = std::max(report.max_residual, r);
        }
      }
    }
  }
  report.nondegenerate =
      !is_zero(a[ix(1, 1)], tol) && !is_zero(b[ix(1, 1)], tol);

  for (int r = 0; r < 2; ++r) {
    for (int s = 0; s < 2; ++s) {
      report.conclusion_residual = std::max(
          report.conclusion_residual,
          max_abs({a[ix(r, 0)] * b[ix(0, s)], a[ix(0, r)] * b[ix(s, 0)],
                   c[ix(r, 0)] * d[ix(0, s)], c[ix(0, r)] * d[ix(s, 0)]}));
    }
  }
  report.remark_residual = max_abs(
      {c[ix(0, 1)] * c[ix(1, 0)] - eta * c[ix(0, 0)] * c[ix(1, 1)],
       d[ix(0, 1)] * d[ix(1, 0)] - eta * d[ix(0, 0)] * d[ix(1, 1)]});

  conclude(report, tol, all_zero({c[ix(0, 0)], c[ix(0, 1)], c[ix(1, 0)]}, tol),
           all_zero({d[ix(0, 0)], d[ix(0, 1)], d[ix(1, 0)]}, tol));
  return report;
}

LemmaReport check_lemma_3sets(const LemmaSystem &sys, double tol) {
  require_shape(sys, LemmaArity::k3Sets, 4, 2, 2, 4);
  const auto &[a, b, c, d, eta] =
      std::tie(sys.a, sys.b, sys.c, sys.d, sys.eta);

  LemmaReport report;
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      for (int m = 0; m < 2; ++m) {
        const Amplitude factor = (j & k & m) ? eta : Amplitude{1.0};
        const double r =
            std::abs(a[ix(j, k)] * b[m] - factor * c[j] * d[ix(k, m)]);
        report.max_residual = std::max(report.max_residual, r);
      }
    }
  }
  report.nondegenerate = !is_zero(a[ix(1, 1)], tol) && !is_zero(b[1], tol);
  report.conclusion_residual =
      max_abs({a[ix(0, 0)] * b[0], c[0] * d[ix(0, 0)], a[ix(0, 1)] * b[0],
               c[0] * d[ix(1, 0)]});
  report.remark_residual = std::abs(d[ix(0, 1)] * d[ix(1, 0)] -
                                    eta * d[ix(0, 0)] * d[ix(1, 1)]);

  conclude(report, tol, is_zero(c[0], tol),
           all_zero({d[ix(0, 0)], d[ix(1, 0)]}, tol));
  return report;
}

LemmaReport check_lemma_2sets(const LemmaSystem &sys, double tol) {
  require_shape(sys, LemmaArity::k2Sets, 2, 2, 2, 2);
  const auto &[a, b, c, d, eta] =
      std::tie(sys.a, sys.b, sys.c, sys.d, sys.eta);

  LemmaReport report;
  for (int j = 0; j < 2; ++j) {
    for (int m = 0; m < 2; ++m) {
      const Amplitude factor = (j & m) ? eta : Amplitude{1.0};
      report.max_residual = std::max(
          report.max_residual, std::abs(a[j] * b[m] - factor * c[j] * d[m]));
    }
  }
  report.nondegenerate = !is_zero(a[1], tol) && !is_zero(b[1], tol);
  report.conclusion_residual = max_abs({a[0] * b[0], c[0] * d[0]});

  conclude(report, tol, is_zero(c[0], tol), is_zero(d[0], tol));
  return report;
}

LemmaReport check_lemma(const LemmaSystem &sys, double tol) {
  switch (sys.arity) {
  case LemmaArity::k4Sets:
    return check_lemma_4sets(sys, tol);
  case LemmaArity::k3Sets:
    return check_lemma_3sets(sys, tol);
  case LemmaArity::k2Sets:
    return check_lemma_2sets(sys, tol);
  }
  throw ArgumentError("unknown lemma arity");
}

LemmaSystem sample_lemma_system(LemmaArity arity, Amplitude eta,
                                std::uint64_t seed) {
  if (!(std::abs(eta - 1.0) > kEtaTolerance)) {
    throw ArgumentError("lemma needs eta != 1");
  }
  Rng rng(seed);
  const bool c_family = rng.below(2) == 0;
  const auto free = [&] { return rng.unit_phase(); };
  // Optional parameters vanish a quarter of the time.
  const auto optional = [&] {
    const Amplitude v = rng.unit_phase();
    return rng.below(4) == 0 ? Amplitude{} : v;
  };

  LemmaSystem sys;
  sys.arity = arity;
  sys.eta = eta;
  const Amplitude zero{};

  switch (arity) {
  case LemmaArity::k4Sets:
    if (c_family) {
      // c00 = c01 = c10 = 0; a and b live on the j = 1 / l = 1 rows.
      const Amplitude a10 = optional(), a11 = free(), b10 = optional(),
                      b11 = free(), c11 = free();
      sys.a = {zero, zero, a10, a11};
      sys.b = {zero, zero, b10, b11};
      sys.c = {zero, zero, zero, c11};
      sys.d = {a10 * b10 / c11, a10 * b11 / c11, a11 * b10 / c11,
               a11 * b11 / (eta * c11)};
    } else {
      // d00 = d01 = d10 = 0; a and b live on the k = 1 / m = 1 columns.
      const Amplitude a01 = optional(), a11 = free(), b01 = optional(),
                      b11 = free(), d11 = free();
      sys.a = {zero, a01, zero, a11};
      sys.b = {zero, b01, zero, b11};
      sys.c = {a01 * b01 / d11, a01 * b11 / d11, a11 * b01 / d11,
               a11 * b11 / (eta * d11)};
      sys.d = {zero, zero, zero, d11};
    }
    break;
  case LemmaArity::k3Sets:
    if (c_family) {
      const Amplitude a10 = optional(), a11 = free(), b0 = optional(),
                      b1 = free(), c1 = free();
      sys.a = {zero, zero, a10, a11};
      sys.b = {b0, b1};
      sys.c = {zero, c1};
      sys.d = {a10 * b0 / c1, a10 * b1 / c1, a11 * b0 / c1,
               a11 * b1 / (eta * c1)};
    } else {
      const Amplitude c0 = optional(), c1 = free(), d01 = optional(),
                      d11 = free(), b1 = free();
      sys.a = {c0 * d01 / b1, c0 * d11 / b1, c1 * d01 / b1,
               eta * c1 * d11 / b1};
      sys.b = {zero, b1};
      sys.c = {c0, c1};
      sys.d = {zero, d01, zero, d11};
    }
    break;
  case LemmaArity::k2Sets:
    if (c_family) {
      const Amplitude a1 = free(), b0 = optional(), b1 = free(), c1 = free();
      sys.a = {zero, a1};
      sys.b = {b0, b1};
      sys.c = {zero, c1};
      sys.d = {a1 * b0 / c1, a1 * b1 / (eta * c1)};
    } else {
      const Amplitude c0 = optional(), c1 = free(), d1 = free(), b1 = free();
      sys.a = {c0 * d1 / b1, eta * c1 * d1 / b1};
      sys.b = {zero, b1};
      sys.c = {c0, c1};
      sys.d = {zero, d1};
    }
    break;
  }
  return sys;
}

} // namespace czw
