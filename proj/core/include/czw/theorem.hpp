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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "czw/gate.hpp"
#include "czw/lemmas.hpp"
#include "czw/separability.hpp"
#include "czw/simplification.hpp"
#include "czw/state.hpp"
#include "czw/strings.hpp"

namespace czw {

struct Tolerances {
  double zero = kZeroTolerance;
  double separability = kSeparabilityTolerance;
};

/// The four sets S∩A∩C, S∩A∩D, S∩B∩C, S∩B∩D, in that order.
enum class Quad { kAC = 0, kAD = 1, kBC = 2, kBD = 3 };

const char *to_string(Quad quad);

std::array<QubitSet, 4> quads_of(const QubitSet &s, const QubitSet &a,
                                 const QubitSet &b, const QubitSet &c,
                                 const QubitSet &d);

enum class ProofCase { kCase1 = 1, kCase2 = 2, kCase3 = 3 };

/// Side swaps that carry a configuration onto the canonical orientation:
/// case 2 with S∩B∩C empty, case 3 with S∩A∩D and S∩B∩C empty.
struct Relabeling {
  bool swap_ab = false;
  bool swap_cd = false;

  friend bool operator==(const Relabeling &, const Relabeling &) = default;
};

struct CaseTag {
  ProofCase value = ProofCase::kCase1;
  /// Empty quads, in the caller's orientation.
  std::vector<Quad> empty_quads;
  Relabeling relabeling;

  friend bool operator==(const CaseTag &, const CaseTag &) = default;
};

/// The four sides after a relabeling.
struct Sides {
  QubitSet a, b, c, d;
};

Sides relabel(const Relabeling &r, const Sides &sides);

/// ArgumentError unless {A,B} and {C,D} are bipartitions of the same set and
/// both split S. Patterns the two splits cannot produce raise
/// InternalContradiction.
CaseTag classify_case(const QubitSet &s, const QubitSet &a, const QubitSet &b,
                      const QubitSet &c, const QubitSet &d);

/// Scalar products of the family strings with the factor states, in the
/// canonical orientation. Entries are indexed 2·j + k. All sixteen are kept;
/// the reduced views below select what each case uses.
struct CoefficientSystem {
  std::array<Amplitude, 4> a{}, b{}, c{}, d{};
  Amplitude eta{};
  CaseTag case_tag;
  PartialString x;
  PartialString u;

  static constexpr int at(int j, int k) { return 2 * j + k; }
};

/// Full string u on the carrier with u all ones on S and |<u|psi>| > tol,
/// smallest basis index first. nullopt exactly when G fixes psi.
std::optional<PartialString> find_u(const PureState &psi, const QubitSet &s,
                                    double tol = kZeroTolerance);

/// Builds the coefficient system for a test string x. `phi` must equal
/// apply(gate, psi); the certificates must factor psi across (A,B) and phi
/// across (C,D). Without `u` the all-ones string is used. ArgumentError on
/// any precondition violation, including x not being a test string.
CoefficientSystem
extract_coefficients(const PureState &psi, const PureState &phi,
                     const SeparationCertificate &cert_ab,
                     const SeparationCertificate &cert_cd,
                     const PhaseGate &gate, const PartialString &x,
                     const std::optional<PartialString> &u = std::nullopt,
                     double tol = kSeparabilityTolerance);

/// Largest residual of the case's equations (16, 8 or 4 of them).
double case_equation_residual(const CoefficientSystem &sys);

/// c·d = eta·a·b on the all-ones index and c·d = a·b elsewhere, at tol.
bool check_case_equations(const CoefficientSystem &sys,
                          double tol = kZeroTolerance);

/// The matching lemma's system: case 1 -> 4-sets, case 2 -> 3-sets (l := 0),
/// case 3 -> 2-sets (k := l := 0). The lemmas put eta on the c·d side, so the
/// phase is conjugated.
LemmaSystem to_lemma_system(const CoefficientSystem &sys);

struct WitnessConstruction {
  PartialString y;
  bool is_test_string = false;
  Amplitude amplitude{};
  /// Intermediate strings by name (y_AC, y_AD, y_A, ...), canonical labels.
  std::vector<std::pair<std::string, PartialString>> intermediates;
};

/// Builds the test string y of the non-simplification argument for the
/// given configuration. The case tag must match classify_case. ArgumentError
/// when G simplifies on psi; InternalContradiction when a required support
/// string is missing.
WitnessConstruction construct_witness_y(const PureState &psi,
                                        const PureState &phi,
                                        const QubitSet &s, const QubitSet &a,
                                        const QubitSet &b, const QubitSet &c,
                                        const QubitSet &d, const CaseTag &tag,
                                        double tol = kZeroTolerance);

/// Everything needed to reproduce a trial in which no branch fired.
struct CounterexampleDump {
  QubitSet carrier;
  std::vector<Amplitude> amplitudes;
  QubitSet s;
  double theta = 0.0;
  Tolerances tolerances;
  std::vector<std::pair<Bipartition, double>> input_sigma2;
  std::vector<std::pair<Bipartition, double>> output_sigma2;
  SimplificationVerdict simplification;
};

struct TrichotomyReport {
  bool input_entangled = false;
  bool output_entangled = false;
  SimplificationVerdict simplifies;
  std::optional<SeparationCertificate> input_cert;
  std::optional<SeparationCertificate> output_cert;
  /// Second singular value across each bipartition splitting S.
  std::vector<std::pair<Bipartition, double>> input_sigma2;
  std::vector<std::pair<Bipartition, double>> output_sigma2;
  PureState output;
  bool holds = false;
  std::optional<CounterexampleDump> counterexample_dump;

  bool simplifies_fired() const {
    return simplifies.kind != SimplificationKind::kNone;
  }
  /// e.g. "(1)", "(2)", "(1),(3)"; empty when nothing fired.
  std::string fired_branches() const;
};

/// Evaluates the three branches independently for G_S with phase e^{i theta}.
/// ArgumentError when |S| < 2.
TrichotomyReport verify_trichotomy(const PureState &psi, const QubitSet &s,
                                   double theta, const Tolerances &tol = {});

} // namespace czw
