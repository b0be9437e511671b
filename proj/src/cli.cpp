// Copyright 2026 The qcmp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcmp/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "qcmp/circuit_json.hpp"
#include "qcmp/comparator.hpp"
#include "qcmp/errors.hpp"
#include "qcmp/qasm.hpp"
#include "qcmp/resources.hpp"
#include "qcmp/simulator.hpp"
#include "qcmp/verify.hpp"

namespace qcmp::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string variant = "figure";
  std::string backend = "auto";
  std::string format;
  std::string out;
  std::uint64_t seed = kDefaultSeed;
  std::size_t dense_cap = SimOptions{}.dense_qubit_cap;
};

void add_common(CLI::App* cmd, Common& c, const std::string& default_format,
                std::vector<std::string> formats) {
  c.format = default_format;
  cmd->add_option("--variant", c.variant, "Builder variant: figure|algorithmic (verify also: both)")
      ->capture_default_str();
  cmd->add_option("--backend", c.backend, "Backend: auto|dense|classical")
      ->capture_default_str();
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember(std::move(formats)))
      ->capture_default_str();
  cmd->add_option("--out", c.out, "Write output to this path");
  cmd->add_option("--seed", c.seed, "RNG seed")->capture_default_str();
  cmd->add_option("--dense-cap", c.dense_cap, "Dense backend qubit cap")
      ->capture_default_str();
}

BuilderVariant variant_of(const Common& c) {
  auto v = variant_from_name(c.variant);
  if (!v) throw UsageError("unknown variant '" + c.variant + "'");
  return *v;
}

Backend backend_of(const Common& c) {
  auto b = backend_from_name(c.backend);
  if (!b) throw UsageError("unknown backend '" + c.backend + "'");
  return *b;
}

SimOptions sim_options_of(const Common& c) {
  SimOptions o;
  o.dense_qubit_cap = c.dense_cap;
  return o;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open '" + tmp.string() + "'");
    f << text;
    if (!f.flush()) throw std::runtime_error("write to '" + tmp.string() + "' failed");
  }
  std::filesystem::rename(tmp, target);
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kTooManyQubits:
    case ErrorCode::kNormDrift:
    case ErrorCode::kNonClassicalGate:
      return kExitBackend;
    default:
      return kExitUsage;
  }
}

std::string decimal(const Bits& bits) { return integer_from_bits(bits).str(); }

OperandCase case_of(const Operands& ops) {
  return ops.a == ops.b ? OperandCase::kEqual : OperandCase::kUnequal;
}

// ---------------------------------------------------------------------------

struct BuildArgs {
  Common common;
  std::string a, b;
  std::string emit_format;
};

std::string cmd_build(const BuildArgs& args) {
  const Operands ops = encode_operands(args.a, args.b);
  const Circuit circuit = build_gqbsc(ops, variant_of(args.common));
  const std::string format =
      args.emit_format.empty() ? args.common.format : args.emit_format;
  if (format == "qasm") return export_qasm(circuit);
  if (format == "text") {
    std::ostringstream o;
    const GateCensus c = static_census(circuit);
    o << "qubits " << circuit.num_qubits() << "\nclbits "
      << circuit.num_clbits() << "\ninstructions " << circuit.size()
      << "\nx " << c.count(GateKind::kX) << "\nccx "
      << c.count(GateKind::kCCX) << "\nmeasures " << c.measure_count
      << "\nblocks " << c.block_count_1bc << '\n';
    return o.str();
  }
  return dump_circuit_json(circuit) + "\n";
}

struct CompareArgs {
  Common common;
  std::string a, b;
  std::uint64_t shots = 0;
  std::optional<double> noise_p;
  std::optional<double> noise_q;
};

std::string cmd_compare(const CompareArgs& args) {
  if ((args.noise_p || args.noise_q) && args.shots == 0) {
    throw UsageError("--noise-p/--noise-q require --shots");
  }
  const Operands ops = encode_operands(args.a, args.b);
  const BuilderVariant variant = variant_of(args.common);
  const Backend backend = backend_of(args.common);
  const SimOptions options = sim_options_of(args.common);

  const ComparisonOutcome outcome =
      compare(ops, backend, variant, args.common.seed, options);
  const MeasuredResources measured =
      measured_report(comparator_body(ops.n(), variant), ops);
  const ResourceEstimate formula = formula_report(
      Method::kProposed, static_cast<std::int64_t>(ops.n()), case_of(ops));

  std::optional<Histogram> hist;
  std::optional<NoiseModel> noise;
  if (args.shots > 0) {
    if (args.noise_p || args.noise_q) {
      noise = NoiseModel{args.noise_p.value_or(0.0), args.noise_q.value_or(0.0)};
      try {
        noise->validate();
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
    }
    const Circuit circuit = build_gqbsc(ops, variant);
    const Bits zeros(circuit.num_qubits(), 0);
    hist = sample(circuit, zeros, args.shots, noise, args.common.seed, backend,
                  options);
  }

  if (args.common.format == "json") {
    nlohmann::ordered_json j;
    j["a"] = decimal(ops.a);
    j["b"] = decimal(ops.b);
    j["a_bits"] = bits_to_string(ops.a);
    j["b_bits"] = bits_to_string(ops.b);
    j["n"] = ops.n();
    j["class"] = class_name(outcome.cls);
    j["r0"] = outcome.r0;
    j["r1"] = outcome.r1;
    j["backend"] = backend_name(outcome.backend);
    j["variant"] = variant_name(variant);
    j["resources"] = {{"qubits", measured.qubits},
                      {"width", measured.width_total},
                      {"ancilla", measured.ancilla},
                      {"static_cost", measured.static_cost},
                      {"executed_cost", *measured.executed_cost},
                      {"structural_delay", measured.structural_delay},
                      {"formula_case", case_name(formula.operand_case)},
                      {"formula_cost", formula.cost},
                      {"formula_delay", formula.delay}};
    if (hist) {
      j["shots"] = hist->shots;
      j["seed"] = args.common.seed;
      j["noise"] = {{"p", noise ? noise->depolarizing_per_gate : 0.0},
                    {"q", noise ? noise->readout_flip : 0.0}};
      auto bins = nlohmann::ordered_json::array();
      for (const auto& [value, count] : hist->counts) {
        bins.push_back({{"r0", value & 1u}, {"r1", (value >> 1) & 1u},
                        {"count", count}});
      }
      j["histogram"] = std::move(bins);
    }
    return j.dump(2) + "\n";
  }

  std::ostringstream o;
  o << "a        " << decimal(ops.a) << " (" << bits_to_string(ops.a) << ")\n"
    << "b        " << decimal(ops.b) << " (" << bits_to_string(ops.b) << ")\n"
    << "n        " << ops.n() << '\n'
    << "class    " << class_name(outcome.cls) << '\n'
    << "r0       " << int(outcome.r0) << '\n'
    << "r1       " << int(outcome.r1) << '\n'
    << "backend  " << backend_name(outcome.backend) << '\n'
    << "variant  " << variant_name(variant) << '\n'
    << "qubits   " << measured.qubits << " (width " << measured.width_total
    << ", ancilla " << measured.ancilla << ")\n"
    << "cost     " << measured.static_cost << " static body, "
    << *measured.executed_cost << " executed\n"
    << "delay    " << measured.structural_delay << " structural\n"
    << "formula  cost " << formula.cost << ", delay " << formula.delay << " ("
    << case_name(formula.operand_case) << ")\n";
  if (hist) {
    o << "shots    " << hist->shots << '\n';
    for (const auto& [value, count] : hist->counts) {
      o << "  r0=" << (value & 1u) << " r1=" << ((value >> 1) & 1u) << "  "
        << count << '\n';
    }
  }
  return o.str();
}

struct VerifyArgs {
  Common common;
  std::size_t max_bits = 1000;
  std::size_t exhaustive_bits = 8;
  std::size_t samples = 100;
  std::size_t dense_max_bits = 4;
  std::string widths;
};

std::string cmd_verify(const VerifyArgs& args, int& exit_code,
                       std::ostream& err) {
  VerifyConfig config;
  config.max_bits = args.max_bits;
  config.exhaustive_bits = args.exhaustive_bits;
  config.samples = args.samples;
  config.seed = args.common.seed;
  config.sim_options = sim_options_of(args.common);
  config.dense_max_bits = args.dense_max_bits;
  if (args.max_bits < 1) throw UsageError("--max-bits must be at least 1");
  if (args.common.variant != "both") config.variants = {variant_of(args.common)};
  const Backend backend = backend_of(args.common);
  // auto and classical check the classical backend; dense adds dense replays.
  config.include_dense = backend == Backend::kDense;
  if (!args.widths.empty()) {
    std::vector<std::size_t> ws;
    for (auto v : parse_n_values(args.widths)) ws.push_back(static_cast<std::size_t>(v));
    config.widths = ws;
  }

  const auto start = std::chrono::steady_clock::now();
  const VerifyReport report = verify_comparator(config);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  exit_code = report.ok() ? kExitOk : kExitMismatch;
  for (const auto& ex : report.examples) err << "mismatch: " << ex << '\n';

  if (args.common.format == "json") {
    nlohmann::ordered_json j;
    auto ws = nlohmann::ordered_json::array();
    for (const auto& w : report.widths) {
      ws.push_back({{"n", w.n},
                    {"mode", w.exhaustive ? "exhaustive" : "sampled"},
                    {"pairs", w.pairs},
                    {"checks", w.checks},
                    {"mismatches", w.mismatches}});
    }
    j["widths"] = std::move(ws);
    j["pairs"] = report.pairs;
    j["checks"] = report.checks;
    j["mismatches"] = report.mismatches;
    j["ok"] = report.ok();
    return j.dump(2) + "\n";
  }
  std::ostringstream o;
  for (const auto& w : report.widths) {
    o << "n=" << w.n << (w.exhaustive ? " exhaustive" : " sampled")
      << " pairs=" << w.pairs << " checks=" << w.checks
      << " mismatches=" << w.mismatches << '\n';
  }
  o << "total pairs=" << report.pairs << " checks=" << report.checks
    << " mismatches=" << report.mismatches << '\n'
    << "elapsed " << std::fixed << std::setprecision(3) << seconds << " s\n"
    << (report.ok() ? "PASS" : "FAIL") << '\n';
  return o.str();
}

struct SweepArgs {
  Common common;
  std::string metric;
  std::string n_values = "1:10";
  std::vector<std::string> methods;
  std::string operand_case = "Equal";
};

std::string cmd_sweep(const SweepArgs& args, std::ostream& err) {
  const auto metric = metric_from_name(args.metric);
  if (!metric) throw UsageError("unknown metric '" + args.metric + "'");
  const auto oc = case_from_name(args.operand_case);
  if (!oc) throw UsageError("unknown case '" + args.operand_case + "'");
  std::vector<Method> methods;
  if (args.methods.empty()) {
    methods.assign(kAllMethods.begin(), kAllMethods.end());
  } else {
    for (const auto& m : args.methods) methods.push_back(method_from_name(m));
  }
  const auto ns = parse_n_values(args.n_values);
  const auto rows = sweep(methods, ns, *metric, *oc);

  std::ostringstream notes;
  for (const auto& d : known_figure_deviations()) {
    if (d.metric != *metric) continue;
    if (std::find(methods.begin(), methods.end(), d.method) == methods.end()) continue;
    if (d.n != 0 && std::find(ns.begin(), ns.end(), d.n) == ns.end()) continue;
    notes << "note: " << method_name(d.method) << ' ' << metric_name(d.metric)
          << (d.n ? " n=" + std::to_string(d.n) : std::string()) << ": " << d.note
          << '\n';
  }

  if (args.common.format == "json") {
    err << notes.str();
    return sweep_to_json(rows);
  }
  if (args.common.format == "csv") {
    err << notes.str();
    return sweep_to_csv(rows);
  }
  std::ostringstream o;
  o << std::left << std::setw(10) << "method" << std::right << std::setw(8)
    << "n" << std::setw(12) << metric_name(*metric) << '\n';
  for (const auto& r : rows) {
    o << std::left << std::setw(10) << method_name(r.method) << std::right
      << std::setw(8) << r.n << std::setw(12) << r.value << '\n';
  }
  o << notes.str();
  return o.str();
}

struct CensusArgs {
  Common common;
  std::string n_values = "1:10";
};

std::string cmd_census(const CensusArgs& args) {
  const auto rows = gate_growth(parse_n_values(args.n_values), variant_of(args.common));
  if (args.common.format == "json") return growth_to_json(rows);
  if (args.common.format == "csv") return growth_to_csv(rows);
  std::ostringstream o;
  o << std::setw(6) << "n" << std::setw(8) << "x" << std::setw(8) << "ccx"
    << std::setw(8) << "1bc" << std::setw(10) << "blk_meas" << std::setw(10)
    << "measures" << std::setw(8) << "qubits" << std::setw(8) << "width"
    << std::setw(8) << "cost" << std::setw(8) << "delay" << '\n';
  for (const auto& r : rows) {
    o << std::setw(6) << r.n << std::setw(8) << r.x_gates << std::setw(8)
      << r.ccx_gates << std::setw(8) << r.blocks_1bc << std::setw(10)
      << r.block_measures << std::setw(10) << r.total_measures << std::setw(8)
      << r.qubits << std::setw(8) << r.width << std::setw(8) << r.body_cost
      << std::setw(8) << r.structural_delay << '\n';
  }
  return o.str();
}

struct ExportArgs {
  Common common;
  std::string a, b;
  std::int64_t n = 0;
};

std::string cmd_export(const ExportArgs& args) {
  const BuilderVariant variant = variant_of(args.common);
  if (args.n > 0) {
    if (!args.a.empty() || !args.b.empty()) {
      throw UsageError("give either --n or --a/--b");
    }
    return export_qasm(comparator_body(static_cast<std::size_t>(args.n), variant));
  }
  if (args.a.empty() || args.b.empty()) {
    throw UsageError("export needs --a and --b, or --n for the operand-free body");
  }
  return export_qasm(build_gqbsc(encode_operands(args.a, args.b), variant));
}

}  // namespace

std::vector<std::int64_t> parse_n_values(const std::string& text) {
  auto bad = [&](const std::string& why) {
    return Error(ErrorCode::kInvalidArgument,
                 "bad n list '" + text + "': " + why);
  };
  auto to_int = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw bad("'" + s + "' is not a positive integer");
    }
    const std::int64_t v = std::stoll(s);
    if (v < 1) throw bad("widths start at 1");
    return v;
  };
  std::vector<std::int64_t> values;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    std::vector<std::string> parts;
    std::stringstream ps(item);
    std::string part;
    while (std::getline(ps, part, ':')) parts.push_back(part);
    if (parts.size() == 1) {
      values.push_back(to_int(parts[0]));
    } else if (parts.size() == 2 || parts.size() == 3) {
      const std::int64_t lo = to_int(parts[0]);
      const std::int64_t hi = to_int(parts[1]);
      const std::int64_t step = parts.size() == 3 ? to_int(parts[2]) : 1;
      if (hi < lo) throw bad("empty range");
      if ((hi - lo) / step > 1'000'000) throw bad("range too long");
      for (std::int64_t v = lo; v <= hi; v += step) values.push_back(v);
    } else {
      throw bad("malformed range '" + item + "'");
    }
  }
  if (values.empty()) throw bad("no values");
  return values;
}

int run_cli(std::span<const std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Quantum bit-string comparator toolkit", "qcmp"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Build a comparator circuit");
  add_common(build_cmd, build.common, "json", {"json", "qasm", "text"});
  build_cmd->add_option("--a", build.a, "First operand (decimal or bin:...)")->required();
  build_cmd->add_option("--b", build.b, "Second operand")->required();
  build_cmd->add_option("--emit", build.emit_format, "Alias for --format")
      ->check(CLI::IsMember({"json", "qasm", "text"}));

  CompareArgs cmp;
  auto* compare_cmd = app.add_subcommand("compare", "Compare two operands");
  add_common(compare_cmd, cmp.common, "text", {"text", "json"});
  compare_cmd->add_option("--a", cmp.a, "First operand (decimal or bin:...)")->required();
  compare_cmd->add_option("--b", cmp.b, "Second operand")->required();
  compare_cmd->add_option("--shots", cmp.shots, "Sample this many shots");
  compare_cmd->add_option("--noise-p", cmp.noise_p, "Depolarizing probability per gate");
  compare_cmd->add_option("--noise-q", cmp.noise_q, "Readout flip probability");

  VerifyArgs ver;
  ver.common.variant = "both";
  auto* verify_cmd = app.add_subcommand("verify", "Check the comparator against integer comparison");
  add_common(verify_cmd, ver.common, "text", {"text", "json"});
  verify_cmd->add_option("--max-bits", ver.max_bits, "Largest operand width")->capture_default_str();
  verify_cmd->add_option("--exhaustive-bits", ver.exhaustive_bits, "Check every pair up to this width")->capture_default_str();
  verify_cmd->add_option("--samples", ver.samples, "Random pairs per sampled width")
      ->capture_default_str();
  verify_cmd->add_option("--dense-max-bits", ver.dense_max_bits,
                         "Widths replayed on the dense backend with --backend dense")
      ->capture_default_str();
  verify_cmd->add_option("--widths", ver.widths, "Sampled widths, e.g. 9,100:1000:100");

  SweepArgs sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "Closed-form resource models");
  add_common(sweep_cmd, sw.common, "csv", {"csv", "json", "text"});
  sweep_cmd->add_option("--metric", sw.metric, "ancilla|cost|delay")->required();
  sweep_cmd->add_option("--n", sw.n_values, "Widths, e.g. 1,80:960:80,1000")
      ->capture_default_str();
  sweep_cmd->add_option("--methods", sw.methods, "Subset of methods")->delimiter(',');
  sweep_cmd->add_option("--case", sw.operand_case, "Equal|Unequal")->capture_default_str();

  CensusArgs cen;
  auto* census_cmd = app.add_subcommand("census", "Gate census of built comparators");
  add_common(census_cmd, cen.common, "csv", {"csv", "json", "text"});
  census_cmd->add_option("--n", cen.n_values, "Widths")->capture_default_str();

  ExportArgs exp;
  auto* export_cmd = app.add_subcommand("export", "Write a comparator as QASM");
  add_common(export_cmd, exp.common, "qasm", {"qasm"});
  export_cmd->add_option("--a", exp.a, "First operand");
  export_cmd->add_option("--b", exp.b, "Second operand");
  export_cmd->add_option("--n", exp.n, "Emit the operand-free body of width n");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    int exit_code = kExitOk;
    std::string text;
    std::string path;
    if (*build_cmd) {
      text = cmd_build(build);
      path = build.common.out;
    } else if (*compare_cmd) {
      text = cmd_compare(cmp);
      path = cmp.common.out;
    } else if (*verify_cmd) {
      text = cmd_verify(ver, exit_code, err);
      path = ver.common.out;
    } else if (*sweep_cmd) {
      text = cmd_sweep(sw, err);
      path = sw.common.out;
    } else if (*census_cmd) {
      text = cmd_census(cen);
      path = cen.common.out;
    } else if (*export_cmd) {
      text = cmd_export(exp);
      path = exp.common.out;
    }
    emit(text, path, out);
    return exit_code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << error_code_name(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitBackend;
  }
}

}  // namespace qcmp::cli
