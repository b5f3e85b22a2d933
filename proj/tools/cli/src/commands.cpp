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

#include "czw/cli/commands.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "czw/cli/parse.hpp"
#include "czw/cli/state_file.hpp"
#include "czw/errors.hpp"
#include "czw/lemmas.hpp"
#include "czw/random.hpp"

namespace czw::cli {

using nlohmann::json;

namespace {

/// Flag values that parsed but make no sense.
class UsageError : public Error {
public:
  using Error::Error;
};

/// Unreadable or unwritable files.
class FileError : public Error {
public:
  using Error::Error;
};

std::string format_fixed(double v, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, v);
  return buffer;
}

std::string format_complex(Amplitude a) {
  char buffer[96];
  std::snprintf(buffer, sizeof buffer, "%.6g%+.6gi", a.real(), a.imag());
  return buffer;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FileError("cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw FileError("cannot read " + path);
  }
  return buffer.str();
}

double min_sigma2(const std::vector<std::pair<Bipartition, double>> &values) {
  double best = 0.0;
  bool first = true;
  for (const auto &[split, v] : values) {
    if (first || v < best) {
      best = v;
      first = false;
    }
  }
  return best;
}

json amplitudes_json(std::span<const Amplitude> amps) {
  json out = json::array();
  for (const auto &a : amps) {
    out.push_back({a.real(), a.imag()});
  }
  return out;
}

json sigma_json(const std::vector<std::pair<Bipartition, double>> &values) {
  json out = json::array();
  for (const auto &[split, v] : values) {
    out.push_back({{"split", split.to_string()}, {"sigma2", v}});
  }
  return out;
}

json members_json(const QubitSet &s) { return s.members(); }

json dump_json(const CounterexampleDump &dump) {
  return {
      {"carrier", members_json(dump.carrier)},
      {"amplitudes", amplitudes_json(dump.amplitudes)},
      {"s", members_json(dump.s)},
      {"theta", dump.theta},
      {"tol_zero", dump.tolerances.zero},
      {"tol_sep", dump.tolerances.separability},
      {"input_sigma2", sigma_json(dump.input_sigma2)},
      {"output_sigma2", sigma_json(dump.output_sigma2)},
      {"simplification", to_string(dump.simplification.kind)},
  };
}

json certificate_json(const std::optional<SeparationCertificate> &cert) {
  if (!cert) {
    return nullptr;
  }
  return {
      {"split", cert->split.to_string()},
      {"factor_a", amplitudes_json(cert->factor_a.amplitudes())},
      {"factor_b", amplitudes_json(cert->factor_b.amplitudes())},
      {"residual", cert->residual},
  };
}

void print_certificate(std::ostream &out, const char *label,
                       const std::optional<SeparationCertificate> &cert) {
  if (!cert) {
    return;
  }
  out << label << " certificate " << cert->split.to_string()
      << ": residual " << cert->residual << '\n';
  const auto print_factor = [&](const char *name, const PureState &f) {
    out << "  " << name << " on " << f.carrier().to_string() << ":";
    for (const auto &a : f.amplitudes()) {
      out << ' ' << format_complex(a);
    }
    out << '\n';
  };
  print_factor("factor_a", cert->factor_a);
  print_factor("factor_b", cert->factor_b);
}

void print_sigmas(std::ostream &out, const char *label,
                  const std::vector<std::pair<Bipartition, double>> &values) {
  out << label << " sigma_2:";
  for (const auto &[split, v] : values) {
    out << ' ' << split.to_string() << '=' << format_fixed(v, 6);
  }
  out << '\n';
}

// ---- analyze ----

struct AnalyzeOptions {
  std::string path;
  std::string s;
  std::string theta = "pi";
  double tol = kSeparabilityTolerance;
  double zero_tol = kZeroTolerance;
  bool renormalize = false;
  bool json = false;
};

int cmd_analyze(const AnalyzeOptions &opts, std::ostream &out) {
  const QubitSet s = parse_qubit_list(opts.s);
  if (s.size() < 2) {
    throw UsageError("|S| >= 2 required, got " + s.to_string());
  }
  const double theta = parse_theta(opts.theta);
  const PureState psi =
      parse_state_file(read_file(opts.path), opts.renormalize);
  if (!s.is_subset_of(psi.carrier())) {
    throw UsageError("S = " + s.to_string() + " is not inside [" +
                     std::to_string(psi.num_qubits()) + "]");
  }
  // Reject phases near 1 up front so they count as usage errors.
  const PhaseGate gate(s, theta);

  const TrichotomyReport report =
      verify_trichotomy(psi, s, theta, {opts.zero_tol, opts.tol});

  if (opts.json) {
    json line = {
        {"schema", 1},
        {"type", "analyze"},
        {"s", members_json(s)},
        {"theta", theta},
        {"input_entangled", report.input_entangled},
        {"output_entangled", report.output_entangled},
        {"simplifies", to_string(report.simplifies.kind)},
        {"witness_index", report.simplifies.witness_index
                              ? json(*report.simplifies.witness_index)
                              : json(nullptr)},
        {"input_cert", certificate_json(report.input_cert)},
        {"output_cert", certificate_json(report.output_cert)},
        {"input_sigma2", sigma_json(report.input_sigma2)},
        {"output_sigma2", sigma_json(report.output_sigma2)},
        {"holds", report.holds},
        {"branches", report.fired_branches()},
    };
    if (report.counterexample_dump) {
      line["counterexample_dump"] = dump_json(*report.counterexample_dump);
    }
    out << line.dump() << '\n';
  } else {
    out << summary_line(report) << '\n';
    print_certificate(out, "input", report.input_cert);
    print_certificate(out, "output", report.output_cert);
    print_sigmas(out, "input", report.input_sigma2);
    print_sigmas(out, "output", report.output_sigma2);
    out << "simplification: " << to_string(report.simplifies.kind);
    if (report.simplifies.witness_index) {
      out << " (witness qubit " << *report.simplifies.witness_index << ")";
    }
    out << ", max offending amplitude "
        << report.simplifies.max_offending_amplitude << '\n';
    if (report.counterexample_dump) {
      out << "counterexample dump: "
          << dump_json(*report.counterexample_dump).dump() << '\n';
    }
  }
  return report.holds ? kExitOk : kExitInternalContradiction;
}

// ---- fuzz ----

struct FuzzOptions {
  int n_min = 2;
  int n_max = 4;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  std::string thetas = "pi,pi/2,1.0";
  std::string families =
      "haar,product,forced_fixed_point,forced_reduce,basis,plus_all";
  unsigned threads = 0;
  bool json = false;
};

int cmd_fuzz(const FuzzOptions &opts, std::ostream &out) {
  FuzzConfig config;
  config.n_min = opts.n_min;
  config.n_max = opts.n_max;
  config.trials = opts.trials;
  config.seed = opts.seed;
  config.threads = opts.threads;
  config.thetas = parse_theta_list(opts.thetas);
  for (double theta : config.thetas) {
    PhaseGate(QubitSet{}, theta);
  }
  std::stringstream names(opts.families);
  for (std::string name; std::getline(names, name, ',');) {
    const auto kind = family_from_string(name);
    if (!kind) {
      throw UsageError("unknown family '" + name + "'");
    }
    config.families.push_back(*kind);
  }
  if (config.n_min < 2 || config.n_max > kFuzzMaxQubits ||
      config.n_min > config.n_max) {
    throw UsageError("need 2 <= --n-min <= --n-max <= " +
                     std::to_string(kFuzzMaxQubits));
  }

  const FuzzSummary summary = fuzz_trichotomy(config);

  if (opts.json) {
    out << fuzz_jsonl(config, summary, true);
  } else {
    out << "trials: " << summary.trials << '\n';
    out << "failures: " << summary.failures.size() << '\n';
    out << "branches fired:\n";
    for (const auto &[key, count] : summary.branch_histogram) {
      out << "  " << key << ": " << count << '\n';
    }
    for (const auto &[family, histogram] : summary.family_histogram) {
      out << family << ':';
      for (const auto &[key, count] : histogram) {
        out << ' ' << key << '=' << count;
      }
      out << '\n';
    }
    for (const auto &failure : summary.failures) {
      out << "FAILURE trial " << failure.trial << " seed " << failure.seed
          << " family " << to_string(failure.family) << " n=" << failure.n
          << " S=" << failure.s.to_string() << " theta=" << failure.theta
          << '\n';
    }
    out << "wall time: "
        << format_fixed(std::chrono::duration<double>(summary.wall_time).count(),
                        3)
        << " s\n";
  }
  return summary.failures.empty() ? kExitOk : kExitInternalContradiction;
}

// ---- lemma ----

struct LemmaOptions {
  int arity = 4;
  std::string eta_theta = "pi/2";
  std::uint64_t count = 1000;
  std::uint64_t seed = 0;
  bool json = false;
};

int cmd_lemma(const LemmaOptions &opts, std::ostream &out) {
  const double theta = parse_theta(opts.eta_theta);
  const PhaseGate phase(QubitSet{}, theta);
  const auto arity = static_cast<LemmaArity>(opts.arity);

  std::map<std::string, std::uint64_t> histogram;
  std::uint64_t hypothesis_failures = 0;
  double max_residual = 0.0;
  double max_remark = 0.0;
  for (std::uint64_t i = 0; i < opts.count; ++i) {
    const LemmaSystem sys =
        sample_lemma_system(arity, phase.eta(), Rng::derive(opts.seed, i));
    const LemmaReport report = check_lemma(sys);
    ++histogram[to_string(report.conclusion_branch)];
    hypothesis_failures += report.hypothesis_holds ? 0 : 1;
    max_residual = std::max(max_residual, report.max_residual);
    if (report.nondegenerate) {
      max_remark = std::max(max_remark, report.remark_residual);
    }
  }
  const std::uint64_t violated = histogram["violated"];

  if (opts.json) {
    json line = {
        {"schema", 1},
        {"type", "lemma"},
        {"arity", opts.arity},
        {"eta_theta", theta},
        {"count", opts.count},
        {"seed", opts.seed},
        {"hypothesis_failures", hypothesis_failures},
        {"histogram", histogram},
        {"violated", violated},
        {"max_residual", max_residual},
        {"max_remark_residual", max_remark},
    };
    out << line.dump() << '\n';
  } else {
    out << "lemma " << opts.arity << "-sets, eta = e^{i*" << theta
        << "}, systems: " << opts.count << '\n';
    for (const char *branch :
         {"c_branch_zero", "d_branch_zero", "vacuous", "violated"}) {
      out << "  " << branch << ": " << histogram[branch] << '\n';
    }
    out << "hypothesis failures: " << hypothesis_failures << '\n';
    out << "max hypothesis residual: " << max_residual << '\n';
    out << "max remark residual: " << max_remark << '\n';
  }
  return violated == 0 && hypothesis_failures == 0
             ? kExitOk
             : kExitInternalContradiction;
}

// ---- gen ----

struct GenOptions {
  std::string family;
  int n = 0;
  std::uint64_t seed = 0;
  std::string s;
  int witness = 0;
  std::string bits;
  std::string split;
  std::string out_path;
};

int cmd_gen(const GenOptions &opts, std::ostream &out) {
  static const std::map<std::string, FamilyKind> aliases = {
      {"plus", FamilyKind::kPlusAll},
      {"forced-fixed", FamilyKind::kForcedFixedPoint},
      {"forced-reduce", FamilyKind::kForcedReduce},
  };
  std::optional<FamilyKind> kind = family_from_string(opts.family);
  if (!kind) {
    const auto it = aliases.find(opts.family);
    if (it == aliases.end()) {
      throw UsageError("unknown family '" + opts.family + "'");
    }
    kind = it->second;
  }
  if (opts.n < 1 || opts.n > kMaxQubits) {
    throw UsageError("--n must be in [1, " + std::to_string(kMaxQubits) + "]");
  }
  const QubitSet universe = QubitSet::range(opts.n);

  StateFamily family;
  family.kind = *kind;
  family.seed = opts.seed;
  switch (*kind) {
  case FamilyKind::kProduct: {
    const QubitSet a = opts.split.empty() ? QubitSet{1}
                                          : parse_qubit_list(opts.split);
    if (!a.is_subset_of(universe) || a == universe) {
      throw UsageError("--split must name a proper nonempty subset of [n]");
    }
    family.split = {a, universe - a};
    break;
  }
  case FamilyKind::kForcedFixedPoint:
  case FamilyKind::kForcedReduce:
    if (opts.s.empty()) {
      throw UsageError("--s is required for forced families");
    }
    family.targets = parse_qubit_list(opts.s);
    if (!family.targets.is_subset_of(universe)) {
      throw UsageError("--s must lie inside [n]");
    }
    family.witness = opts.witness != 0 ? opts.witness : family.targets.min();
    break;
  case FamilyKind::kBasis:
    if (static_cast<int>(opts.bits.size()) != opts.n) {
      throw UsageError("--bits must have n characters");
    }
    family.bits = PartialString::from_bits(opts.bits);
    break;
  case FamilyKind::kHaar:
  case FamilyKind::kPlusAll:
    break;
  }

  const std::string text = serialize_state(generate(family, opts.n));
  if (opts.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(opts.out_path, std::ios::binary);
    if (!file || !(file << text)) {
      throw FileError("cannot write " + opts.out_path);
    }
  }
  return kExitOk;
}

} // namespace

std::uint64_t default_seed() {
  if (const char *env = std::getenv("CZW_SEED")) {
    char *end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') {
      return value;
    }
  }
  return 7;
}

std::string summary_line(const TrichotomyReport &report) {
  std::string line = "input: ";
  const auto side = [&](bool entangled,
                        const std::optional<SeparationCertificate> &cert,
                        const std::vector<std::pair<Bipartition, double>> &sv) {
    if (entangled) {
      return "S-entangled (σ₂=" + format_fixed(min_sigma2(sv), 4) + ")";
    }
    return "separable " + cert->split.to_string();
  };
  line += side(report.input_entangled, report.input_cert, report.input_sigma2);
  line += "; output: ";
  line +=
      side(report.output_entangled, report.output_cert, report.output_sigma2);
  line += "; simplifies: ";
  line += to_string(report.simplifies.kind);
  if (report.simplifies.witness_index) {
    line += " (i=" + std::to_string(*report.simplifies.witness_index) + ")";
  }
  line += "; trichotomy: ";
  line += report.holds ? "HOLDS via " + report.fired_branches() : "FAILS";
  return line;
}

std::string fuzz_jsonl(const FuzzConfig &config, const FuzzSummary &summary,
                       bool with_timing) {
  std::ostringstream out;
  json families = json::array();
  for (auto kind : config.families) {
    families.push_back(to_string(kind));
  }
  out << json{{"schema", 1},
              {"type", "fuzz_config"},
              {"n_min", config.n_min},
              {"n_max", config.n_max},
              {"trials", config.trials},
              {"seed", config.seed},
              {"thetas", config.thetas},
              {"families", families}}
             .dump()
      << '\n';
  out << json{{"schema", 1},
              {"type", "fuzz_summary"},
              {"trials", summary.trials},
              {"failures", summary.failures.size()},
              {"branch_histogram", summary.branch_histogram}}
             .dump()
      << '\n';
  for (const auto &[family, histogram] : summary.family_histogram) {
    out << json{{"schema", 1},
                {"type", "family_histogram"},
                {"family", family},
                {"branch_histogram", histogram}}
               .dump()
        << '\n';
  }
  for (const auto &failure : summary.failures) {
    out << json{{"schema", 1},
                {"type", "failure"},
                {"trial", failure.trial},
                {"seed", failure.seed},
                {"family", to_string(failure.family)},
                {"n", failure.n},
                {"s", members_json(failure.s)},
                {"theta", failure.theta},
                {"dump", dump_json(failure.dump)}}
               .dump()
        << '\n';
  }
  if (with_timing) {
    out << json{{"schema", 1},
                {"type", "timing"},
                {"wall_time_ms",
                 std::chrono::duration<double, std::milli>(summary.wall_time)
                     .count()}}
               .dump()
        << '\n';
  }
  return out.str();
}

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Controlled-phase entanglement checker"};
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  auto *analyze_cmd =
      app.add_subcommand("analyze", "Check the trichotomy on a state file");
  analyze_cmd->add_option("state-file", analyze.path, "State file")
      ->required();
  analyze_cmd->add_option("--s", analyze.s, "Target qubits, e.g. 1,2")
      ->required();
  analyze_cmd->add_option("--theta", analyze.theta,
                          "Phase angle: pi, pi/<k>, -pi or radians");
  analyze_cmd->add_option("--tol", analyze.tol,
                          "Separability tolerance on sigma_2");
  analyze_cmd->add_option("--zero-tol", analyze.zero_tol,
                          "Amplitude zero tolerance");
  analyze_cmd->add_flag("--renormalize", analyze.renormalize,
                        "Scale the state to unit norm");
  analyze_cmd->add_flag("--json", analyze.json, "JSON-lines output");

  FuzzOptions fuzz;
  fuzz.seed = default_seed();
  auto *fuzz_cmd =
      app.add_subcommand("fuzz", "Randomized trichotomy sweep");
  fuzz_cmd->add_option("--n-min", fuzz.n_min, "Smallest qubit count");
  fuzz_cmd->add_option("--n-max", fuzz.n_max, "Largest qubit count");
  fuzz_cmd->add_option("--trials", fuzz.trials, "Number of trials");
  fuzz_cmd->add_option("--seed", fuzz.seed, "Base seed");
  fuzz_cmd->add_option("--theta", fuzz.thetas, "Comma-separated angles");
  fuzz_cmd->add_option("--families", fuzz.families,
                       "Comma-separated state families");
  fuzz_cmd->add_option("--threads", fuzz.threads, "Worker threads (0 = auto)");
  fuzz_cmd->add_flag("--json", fuzz.json, "JSON-lines output");

  LemmaOptions lemma;
  lemma.seed = default_seed();
  auto *lemma_cmd =
      app.add_subcommand("lemma", "Sample and check appendix lemma systems");
  lemma_cmd->add_option("--arity", lemma.arity, "4, 3 or 2")
      ->check(CLI::IsMember({4, 3, 2}));
  lemma_cmd->add_option("--eta-theta", lemma.eta_theta, "Phase angle of eta");
  lemma_cmd->add_option("--count", lemma.count, "Number of systems");
  lemma_cmd->add_option("--seed", lemma.seed, "Base seed");
  lemma_cmd->add_flag("--json", lemma.json, "JSON output");

  GenOptions gen;
  gen.seed = default_seed();
  auto *gen_cmd = app.add_subcommand("gen", "Write a generated state file");
  gen_cmd
      ->add_option("--family", gen.family,
                   "plus, haar, product, basis, forced-fixed, forced-reduce")
      ->required();
  gen_cmd->add_option("--n", gen.n, "Qubit count")->required();
  gen_cmd->add_option("--seed", gen.seed, "Seed");
  gen_cmd->add_option("--s", gen.s, "Target qubits for forced families");
  gen_cmd->add_option("--witness", gen.witness, "Forced-reduce qubit");
  gen_cmd->add_option("--bits", gen.bits, "Basis bitstring");
  gen_cmd->add_option("--split", gen.split, "Side A of a product split");
  gen_cmd->add_option("--out", gen.out_path, "Output path (default stdout)");

  std::vector<const char *> argv;
  argv.reserve(args.size());
  for (const auto &a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze_cmd->parsed()) {
      return cmd_analyze(analyze, out);
    }
    if (fuzz_cmd->parsed()) {
      return cmd_fuzz(fuzz, out);
    }
    if (lemma_cmd->parsed()) {
      return cmd_lemma(lemma, out);
    }
    return cmd_gen(gen, out);
  } catch (const FileError &e) {
    err << "file error: " << e.what() << '\n';
    return kExitFile;
  } catch (const ParseError &e) {
    err << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const NormalizationError &e) {
    err << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const ShapeError &e) {
    err << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const InternalContradiction &e) {
    err << "internal contradiction: " << e.what() << '\n';
    return kExitInternalContradiction;
  } catch (const Error &e) {
    // Argument, domain and phase errors all trace back to flag values.
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
}

} // namespace czw::cli
