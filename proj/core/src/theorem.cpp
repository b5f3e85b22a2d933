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

#include "czw/theorem.hpp"

#include <algorithm>
#include <cmath>

#include "czw/errors.hpp"

namespace czw {

const char *to_string(Quad quad) {
  switch (quad) {
  case Quad::kAC:
    return "S∩A∩C";
  case Quad::kAD:
    return "S∩A∩D";
  case Quad::kBC:
    return "S∩B∩C";
  case Quad::kBD:
    return "S∩B∩D";
  }
  return "?";
}

std::array<QubitSet, 4> quads_of(const QubitSet &s, const QubitSet &a,
                                 const QubitSet &b, const QubitSet &c,
                                 const QubitSet &d) {
  return {s & a & c, s & a & d, s & b & c, s & b & d};
}

Sides relabel(const Relabeling &r, const Sides &sides) {
  Sides out = sides;
  if (r.swap_ab) {
    std::swap(out.a, out.b);
  }
  if (r.swap_cd) {
    std::swap(out.c, out.d);
  }
  return out;
}

CaseTag classify_case(const QubitSet &s, const QubitSet &a, const QubitSet &b,
                      const QubitSet &c, const QubitSet &d) {
  const bool valid = a.disjoint_with(b) && c.disjoint_with(d) &&
                     (a | b) == (c | d) && s.is_subset_of(a | b);
  if (!valid) {
    throw ArgumentError("(A,B) and (C,D) must be bipartitions of one set "
                        "containing S");
  }
  if (!Bipartition{a, b}.splits(s) || !Bipartition{c, d}.splits(s)) {
    throw ArgumentError("both bipartitions must split S = " + s.to_string());
  }

  CaseTag tag;
  const auto quads = quads_of(s, a, b, c, d);
  for (int q = 0; q < 4; ++q) {
    if (quads[static_cast<std::size_t>(q)].empty()) {
      tag.empty_quads.push_back(static_cast<Quad>(q));
    }
  }

  const auto empty = [&](Quad q) {
    return std::find(tag.empty_quads.begin(), tag.empty_quads.end(), q) !=
           tag.empty_quads.end();
  };
  switch (tag.empty_quads.size()) {
  case 0:
    tag.value = ProofCase::kCase1;
    return tag;
  case 1:
    // Move the empty quad onto S∩B∩C.
    tag.value = ProofCase::kCase2;
    switch (tag.empty_quads.front()) {
    case Quad::kAC:
      tag.relabeling = {true, false};
      break;
    case Quad::kAD:
      tag.relabeling = {true, true};
      break;
    case Quad::kBC:
      break;
    case Quad::kBD:
      tag.relabeling = {false, true};
      break;
    }
    return tag;
  case 2:
    tag.value = ProofCase::kCase3;
    if (empty(Quad::kAD) && empty(Quad::kBC)) {
      return tag;
    }
    if (empty(Quad::kAC) && empty(Quad::kBD)) {
      tag.relabeling = {false, true};
      return tag;
    }
    break;
  default:
    break;
  }
  throw InternalContradiction(
      "two splits of S produced an impossible empty-quad pattern");
}

std::optional<PartialString> find_u(const PureState &psi, const QubitSet &s,
                                    double tol) {
  if (!s.is_subset_of(psi.carrier())) {
    throw DomainError("set " + s.to_string() + " not inside carrier " +
                      psi.carrier().to_string());
  }
  const std::uint64_t mask = position_mask(psi.carrier(), s);
  for (std::uint64_t x = 0; x < psi.dimension(); ++x) {
    if ((x & mask) == mask && std::abs(psi[x]) > tol) {
      return PartialString::from_index(x, psi.carrier());
    }
  }
  return std::nullopt;
}

namespace {

// Factor states in canonical orientation.
struct Factors {
  const PureState *a;
  const PureState *b;
  const PureState *c;
  const PureState *d;
};

} // namespace

CoefficientSystem
extract_coefficients(const PureState &psi, const PureState &phi,
                     const SeparationCertificate &cert_ab,
                     const SeparationCertificate &cert_cd,
                     const PhaseGate &gate, const PartialString &x,
                     const std::optional<PartialString> &u, double tol) {
  const QubitSet universe = psi.carrier();
  const QubitSet &s = gate.targets();
  if (phi.carrier() != universe || cert_ab.split.universe() != universe ||
      cert_cd.split.universe() != universe) {
    throw ArgumentError("states and certificates must share one carrier");
  }
  if (max_abs_difference(phi, apply(gate, psi)) > tol) {
    throw ArgumentError("phi is not the gate applied to psi");
  }
  if (certificate_residual(psi, cert_ab) > tol ||
      certificate_residual(phi, cert_cd) > tol) {
    throw ArgumentError("certificate does not reconstruct its state");
  }

  CoefficientSystem sys;
  sys.case_tag = classify_case(s, cert_ab.split.a, cert_ab.split.b,
                               cert_cd.split.a, cert_cd.split.b);
  const Sides sides = relabel(
      sys.case_tag.relabeling,
      {cert_ab.split.a, cert_ab.split.b, cert_cd.split.a, cert_cd.split.b});
  Factors factors{&cert_ab.factor_a, &cert_ab.factor_b, &cert_cd.factor_a,
                  &cert_cd.factor_b};
  if (sys.case_tag.relabeling.swap_ab) {
    std::swap(factors.a, factors.b);
  }
  if (sys.case_tag.relabeling.swap_cd) {
    std::swap(factors.c, factors.d);
  }

  if (x.domain() != universe) {
    throw ArgumentError("x must be a full string on " + universe.to_string());
  }
  const auto quads = quads_of(s, sides.a, sides.b, sides.c, sides.d);
  if (!is_test_string(x, quads)) {
    throw ArgumentError("x = " + x.to_string() + " is not a test string");
  }
  sys.u = u.value_or(PartialString::constant(universe, 1));
  if (sys.u.domain() != universe || !(s - sys.u.ones()).empty()) {
    throw ArgumentError("u must be a full string that is all ones on S");
  }
  sys.x = x;
  sys.eta = gate.eta();

  const FamilyStrings family =
      build_family(x, sys.u, sides.a, sides.b, sides.c, sides.d);
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      const int i = CoefficientSystem::at(j, k);
      sys.a[i] = factors.a->amplitude(family.at(Region::A, j, k));
      sys.b[i] = factors.b->amplitude(family.at(Region::B, j, k));
      sys.c[i] = factors.c->amplitude(family.at(Region::C, j, k));
      sys.d[i] = factors.d->amplitude(family.at(Region::D, j, k));
    }
  }
  return sys;
}

double case_equation_residual(const CoefficientSystem &sys) {
  const auto at = CoefficientSystem::at;
  double worst = 0.0;
  // Case 2 pins l = 0, case 3 pins k = l = 0.
  const int k_max = sys.case_tag.value == ProofCase::kCase3 ? 1 : 2;
  const int l_max = sys.case_tag.value == ProofCase::kCase1 ? 2 : 1;
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < k_max; ++k) {
      for (int l = 0; l < l_max; ++l) {
        for (int m = 0; m < 2; ++m) {
          bool all_ones = j == 1 && m == 1;
          if (sys.case_tag.value != ProofCase::kCase3) {
            all_ones = all_ones && k == 1;
          }
          if (sys.case_tag.value == ProofCase::kCase1) {
            all_ones = all_ones && l == 1;
          }
          const Amplitude factor = all_ones ? sys.eta : Amplitude{1.0};
          const Amplitude lhs = sys.c[at(j, l)] * sys.d[at(k, m)];
          const Amplitude rhs = factor * sys.a[at(j, k)] * sys.b[at(l, m)];
          worst = std::max(worst, std::abs(lhs - rhs));
        }
      }
    }
  }
  return worst;
}

bool check_case_equations(const CoefficientSystem &sys, double tol) {
  return case_equation_residual(sys) <= tol;
}

LemmaSystem to_lemma_system(const CoefficientSystem &sys) {
  const auto at = CoefficientSystem::at;
  LemmaSystem out;
  out.eta = std::conj(sys.eta);
  const auto &[a, b, c, d] = std::tie(sys.a, sys.b, sys.c, sys.d);
  switch (sys.case_tag.value) {
  case ProofCase::kCase1:
    out.arity = LemmaArity::k4Sets;
    out.a.assign(a.begin(), a.end());
    out.b.assign(b.begin(), b.end());
    out.c.assign(c.begin(), c.end());
    out.d.assign(d.begin(), d.end());
    break;
  case ProofCase::kCase2:
    out.arity = LemmaArity::k3Sets;
    out.a.assign(a.begin(), a.end());
    out.b = {b[at(0, 0)], b[at(0, 1)]};
    out.c = {c[at(0, 0)], c[at(1, 0)]};
    out.d.assign(d.begin(), d.end());
    break;
  case ProofCase::kCase3:
    out.arity = LemmaArity::k2Sets;
    out.a = {a[at(0, 0)], a[at(1, 0)]};
    out.b = {b[at(0, 0)], b[at(0, 1)]};
    out.c = {c[at(0, 0)], c[at(1, 0)]};
    out.d = {d[at(0, 0)], d[at(0, 1)]};
    break;
  }
  return out;
}

namespace {

// Smallest support string of psi with a 0 at qubit i.
PartialString support_with_zero_at(const PureState &psi, int i, double tol,
                                   const char *name) {
  const std::uint64_t bit = position_mask(psi.carrier(), QubitSet{i});
  for (std::uint64_t x = 0; x < psi.dimension(); ++x) {
    if ((x & bit) == 0 && std::abs(psi[x]) > tol) {
      return PartialString::from_index(x, psi.carrier());
    }
  }
  throw InternalContradiction(std::string("no support string for ") + name +
                              " with a 0 at qubit " + std::to_string(i) +
                              ", although G does not simplify");
}

} // namespace

WitnessConstruction construct_witness_y(const PureState &psi,
                                        const PureState &phi,
                                        const QubitSet &s, const QubitSet &a,
                                        const QubitSet &b, const QubitSet &c,
                                        const QubitSet &d, const CaseTag &tag,
                                        double tol) {
  if (phi.carrier() != psi.carrier()) {
    throw ArgumentError("psi and phi must share a carrier");
  }
  if (detect_simplification(psi, s, tol).kind != SimplificationKind::kNone) {
    throw ArgumentError("witness construction requires that G does not "
                        "simplify on psi");
  }
  const CaseTag expected = classify_case(s, a, b, c, d);
  if (expected.value != tag.value || !(expected.relabeling == tag.relabeling)) {
    throw ArgumentError("case tag does not match the configuration");
  }
  const Sides sides = relabel(tag.relabeling, {a, b, c, d});

  WitnessConstruction out;
  auto record = [&](const char *name, PartialString value) {
    out.intermediates.emplace_back(name, value);
    return value;
  };
  // y_R for R in {A, B} through C and D, as in the four-quad construction.
  auto through_cd = [&](const QubitSet &side, const char *via_c,
                        const char *via_d, const char *name) {
    const auto y_c = record(
        via_c, support_with_zero_at(psi, (s & side & sides.c).min(), tol, via_c));
    const auto y_d = record(
        via_d, support_with_zero_at(psi, (s & side & sides.d).min(), tol, via_d));
    return record(name, unite(restrict(y_c, sides.c), restrict(y_d, sides.d)));
  };
  auto direct = [&](const QubitSet &side, const char *name) {
    return record(name,
                  support_with_zero_at(psi, (s & side).min(), tol, name));
  };

  PartialString y_a;
  PartialString y_b;
  switch (tag.value) {
  case ProofCase::kCase1:
    y_a = through_cd(sides.a, "y_AC", "y_AD", "y_A");
    y_b = through_cd(sides.b, "y_BC", "y_BD", "y_B");
    break;
  case ProofCase::kCase2:
    y_a = through_cd(sides.a, "y_AC", "y_AD", "y_A");
    y_b = direct(sides.b, "y_B");
    break;
  case ProofCase::kCase3:
    y_a = direct(sides.a, "y_A");
    y_b = direct(sides.b, "y_B");
    break;
  }
  out.y = unite(restrict(y_a, sides.a), restrict(y_b, sides.b));
  out.is_test_string =
      is_test_string(out.y, quads_of(s, sides.a, sides.b, sides.c, sides.d));
  out.amplitude = psi.amplitude(out.y);
  return out;
}

std::string TrichotomyReport::fired_branches() const {
  std::string out;
  const auto add = [&](bool fired, const char *label) {
    if (fired) {
      out += out.empty() ? "" : ",";
      out += label;
    }
  };
  add(input_entangled, "(1)");
  add(output_entangled, "(2)");
  add(simplifies_fired(), "(3)");
  return out;
}

namespace {

std::optional<SeparationCertificate>
first_separation(const PureState &psi,
                 const std::vector<std::pair<Bipartition, double>> &sigma2,
                 double tol) {
  for (const auto &[split, value] : sigma2) {
    if (value <= tol) {
      return factorize(psi, split, tol);
    }
  }
  return std::nullopt;
}

} // namespace

TrichotomyReport verify_trichotomy(const PureState &psi, const QubitSet &s,
                                   double theta, const Tolerances &tol) {
  if (s.size() < 2) {
    throw ArgumentError("the trichotomy needs |S| >= 2, got " + s.to_string());
  }
  const PhaseGate gate(s, theta);

  TrichotomyReport report;
  report.output = apply(gate, psi);
  report.input_sigma2 = second_singular_values(psi, s);
  report.output_sigma2 = second_singular_values(report.output, s);
  report.input_cert = first_separation(psi, report.input_sigma2,
                                       tol.separability);
  report.output_cert = first_separation(report.output, report.output_sigma2,
                                        tol.separability);
  report.simplifies = detect_simplification(psi, s, tol.zero);
  report.input_entangled = !report.input_cert.has_value();
  report.output_entangled = !report.output_cert.has_value();
  report.holds = report.input_entangled || report.output_entangled ||
                 report.simplifies_fired();

  if (!report.holds) {
    report.counterexample_dump = CounterexampleDump{
        psi.carrier(),
        std::vector<Amplitude>(psi.amplitudes().begin(),
                               psi.amplitudes().end()),
        s,
        theta,
        tol,
        report.input_sigma2,
        report.output_sigma2,
        report.simplifies,
    };
  }
  return report;
}

} // namespace czw
