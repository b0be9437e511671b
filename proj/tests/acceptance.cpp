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

// Acceptance gate: one PASS/FAIL line per criterion. Exit status is non-zero
// if any criterion fails. Tolerances and budgets are pinned below.
//
// usage: qcmp_acceptance [path/to/qcmp]

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qcmp/cli.hpp"
#include "qcmp/comparator.hpp"
#include "qcmp/gateset.hpp"
#include "qcmp/qasm.hpp"
#include "qcmp/resources.hpp"
#include "qcmp/simulator.hpp"
#include "qcmp/verify.hpp"
#include "support/oracles.hpp"

namespace {

using namespace qcmp;
using testing::from_u64;

constexpr double kAc1BudgetSeconds = 30.0;
constexpr double kAc3BudgetSeconds = 10.0;
constexpr double kAc8BudgetSeconds = 120.0;
constexpr double kUnitarityTol = 1e-15;
constexpr double kDecompositionTol = 1e-12;
constexpr double kAc8ArgmaxRate = 0.95;
constexpr int kAc8Seeds = 100;
constexpr std::uint64_t kAc8Shots = 1024;
constexpr double kAc8P = 0.01;
constexpr double kAc8Q = 0.02;

class Clock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Outcome {
  bool pass = true;
  std::string detail;
};

ComparisonClass oracle_class(const Bits& a, const Bits& b) {
  // Equal-width MSB-first bit strings order like their integers.
  const auto sa = bits_to_string(a), sb = bits_to_string(b);
  return sa == sb ? ComparisonClass::kEqual
                  : (sa > sb ? ComparisonClass::kGreater : ComparisonClass::kLess);
}

Outcome ac1() {
  Clock clock;
  std::uint64_t pairs = 0, mismatches = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::uint64_t a = 0; a < (1u << n); ++a) {
      for (std::uint64_t b = 0; b < (1u << n); ++b) {
        const Operands ops{from_u64(a, n), from_u64(b, n)};
        const int sign = testing::sign_compare(a, b);
        const ComparisonClass want = sign == 0 ? ComparisonClass::kEqual
                                     : sign > 0 ? ComparisonClass::kGreater
                                                : ComparisonClass::kLess;
        ++pairs;
        for (auto v : {BuilderVariant::kFigure, BuilderVariant::kAlgorithmic}) {
          const auto out = compare(ops, Backend::kClassical, v);
          if (out.cls != want) ++mismatches;
        }
      }
    }
  }
  const double classical_seconds = clock.seconds();

  std::uint64_t dense_pairs = 0, dense_mismatches = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto v : {BuilderVariant::kFigure, BuilderVariant::kAlgorithmic}) {
      const Circuit body = comparator_body(n, v);
      for (std::uint64_t a = 0; a < (1u << n); ++a) {
        for (std::uint64_t b = 0; b < (1u << n); ++b) {
          const Bits init = operand_basis_state({from_u64(a, n), from_u64(b, n)});
          if (v == BuilderVariant::kFigure) ++dense_pairs;
          if (run_dense(body, init).classical_bits != run_classical(body, init).classical_bits) {
            ++dense_mismatches;
          }
        }
      }
    }
  }
  std::ostringstream d;
  d << pairs << " pairs x 2 variants, " << mismatches << " mismatches, "
    << classical_seconds << " s (budget " << kAc1BudgetSeconds << " s); dense "
    << dense_pairs << " pairs, " << dense_mismatches << " flag differences";
  return {pairs == 87380 && mismatches == 0 && classical_seconds < kAc1BudgetSeconds &&
              dense_pairs == 340 && dense_mismatches == 0,
          d.str()};
}

Outcome ac2() {
  struct Row {
    const char* a;
    const char* b;
    ComparisonClass cls;
  };
  using C = ComparisonClass;
  const std::array<Row, 21> rows = {{
      {"0", "0", C::kEqual},           {"1", "0", C::kGreater},
      {"0", "1", C::kLess},            {"bin:11", "bin:11", C::kEqual},
      {"bin:11", "bin:01", C::kGreater}, {"bin:01", "bin:11", C::kLess},
      {"bin:111", "bin:111", C::kEqual}, {"bin:111", "bin:011", C::kGreater},
      {"bin:011", "bin:111", C::kLess},  {"31", "31", C::kEqual},
      {"31", "30", C::kGreater},       {"30", "31", C::kLess},
      {"120", "120", C::kEqual},       {"127", "63", C::kGreater},
      {"100", "127", C::kLess},        {"600", "600", C::kEqual},
      {"700", "420", C::kGreater},     {"630", "800", C::kLess},
      {"1500", "1500", C::kEqual},     {"1400", "200", C::kGreater},
      {"560", "1137", C::kLess},
  }};
  const std::array<Flags, 3> first_flags = {{{0, 0}, {1, 0}, {0, 1}}};
  int good = 0;
  std::string failures;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto out = compare(encode_operands(rows[i].a, rows[i].b), Backend::kAuto,
                             BuilderVariant::kFigure);
    bool ok = out.cls == rows[i].cls;
    if (i < 3) ok = ok && (Flags{out.r0, out.r1} == first_flags[i]);
    if (ok) {
      ++good;
    } else {
      failures += " row" + std::to_string(i + 1);
    }
  }
  return {good == 21, std::to_string(good) + "/21 rows" + failures};
}

Outcome ac3() {
  Clock clock;
  VerifyConfig config;
  config.max_bits = 1000;
  config.exhaustive_bits = 0;
  config.samples = 100;
  config.widths = std::vector<std::size_t>{1000};
  const VerifyReport report = verify_comparator(config);

  // Cross-check the same pairs against string ordering.
  std::uint64_t independent = 0;
  for (const auto& ops : random_operand_pairs(1000, 100, config.seed)) {
    if (compare(ops, Backend::kClassical).cls != oracle_class(ops.a, ops.b)) ++independent;
  }
  const double seconds = clock.seconds();
  std::uint64_t at_1000 = 0;
  for (const auto& w : report.widths) {
    if (w.n == 1000) at_1000 = w.pairs;
  }
  std::ostringstream d;
  d << at_1000 << " pairs at n=1000, " << report.mismatches << " mismatches, "
    << independent << " oracle disagreements, " << seconds << " s (budget "
    << kAc3BudgetSeconds << " s)";
  return {at_1000 >= 100 && report.ok() && independent == 0 && seconds < kAc3BudgetSeconds,
          d.str()};
}

// Coordinates as plotted, per series in legend order.
using Series = std::vector<std::pair<std::int64_t, std::int64_t>>;

std::vector<std::int64_t> fig11_grid() {
  return {1, 80, 160, 240, 320, 400, 480, 560, 640, 720, 800, 880, 960, 1000};
}

Series zip(const std::vector<std::int64_t>& xs, const std::vector<std::int64_t>& ys) {
  Series s;
  for (std::size_t i = 0; i < xs.size(); ++i) s.emplace_back(xs[i], ys[i]);
  return s;
}

Outcome ac4() {
  const auto g = fig11_grid();
  std::vector<std::int64_t> n10;
  for (std::int64_t n = 1; n <= 10; ++n) n10.push_back(n);
  const std::map<Metric, std::array<Series, 7>> plotted = {
      {Metric::kAncilla,
       {zip(g, {2, 160, 320, 480, 640, 800, 960, 1120, 1280, 1440, 1600, 1760, 1920, 2000}),
        zip(g, {7, 481, 961, 1441, 1921, 2401, 2881, 3361, 3841, 4321, 4801, 5281, 5761, 6001}),
        zip(g, {1, 317, 637, 957, 1277, 1597, 1917, 2237, 2557, 2877, 3197, 3517, 3837, 3997}),
        zip(g, {2, 318, 638, 958, 1278, 1598, 1918, 2238, 2558, 2878, 3198, 3518, 3838, 3998}),
        zip(g, {4, 241, 481, 721, 961, 1201, 1441, 1681, 1921, 2161, 2401, 2641, 2881, 3001}),
        zip(g, std::vector<std::int64_t>(14, 1)),
        zip(g, std::vector<std::int64_t>(14, 2))}},
      {Metric::kCost,
       {zip(g, {1, 6400, 25600, 57600, 102400, 160000, 230400, 313600, 409600, 518400,
                640000, 774400, 921600, 1000000}),
        zip(g, {48, 3129, 6249, 9369, 12489, 15609, 18729, 21849, 24969, 28089, 31209,
                34329, 37449, 39009}),
        zip(g, {27, 1449, 2889, 4329, 5769, 7209, 8649, 10089, 11529, 12969, 14409, 15849,
                17289, 18009}),
        zip(g, {14, 1120, 2240, 3360, 4480, 5600, 6720, 7840, 8960, 10080, 11200, 12320,
                13440, 14000}),
        zip(g, {12, 7833, 15753, 23673, 31593, 39513, 47433, 55353, 63273, 71193, 79113,
                87033, 94953, 98913}),
        zip(g, {28, 2240, 4480, 6720, 8960, 11200, 13440, 15680, 17920, 20160, 22400,
                24640, 26880, 28000}),
        zip(g, {14, 1120, 2240, 3360, 4480, 5600, 6720, 7840, 8960, 10080, 11200, 12320,
                13440, 14000})}},
      {Metric::kDelay,
       {zip(n10, {1, 4, 9, 16, 25, 36, 49, 64, 81, 100}),
        zip(n10, {33, 57, 81, 105, 129, 153, 177, 201, 225, 249}),
        zip(n10, {12, 18, 21, 23, 25, 26, 28, 29, 30, 30}),
        zip(n10, {14, 15, 16, 17, 17, 17, 18, 18, 18, 19}),
        zip(n10, {19, 29, 59, 79, 99, 119, 139, 159, 179, 199}),
        zip(n10, {33, 64, 95, 126, 157, 188, 219, 250, 281, 312}),
        zip(n10, {4, 9, 13, 18, 22, 27, 31, 36, 40, 45})}},
  };
  const auto deviations = known_figure_deviations();
  auto is_known = [&](Method m, Metric metric, std::int64_t n) {
    for (const auto& d : deviations) {
      if (d.method == m && d.metric == metric && (d.n == 0 || d.n == n)) return true;
    }
    return false;
  };

  int points = 0, exact = 0, known = 0;
  std::string unexpected;
  for (const auto& [metric, series] : plotted) {
    for (std::size_t k = 0; k < kAllMethods.size(); ++k) {
      const Method m = kAllMethods[k];
      // Proposed: the cost panel plots the equal-operand case, the delay
      // panel the unequal one.
      const OperandCase oc = (m == Method::kProposed && metric == Metric::kDelay)
                                 ? OperandCase::kUnequal
                                 : OperandCase::kEqual;
      for (const auto& [n, y] : series[k]) {
        ++points;
        const std::int64_t got = formula_report(m, n, oc).value(metric);
        if (got == y) {
          ++exact;
        } else if (is_known(m, metric, n)) {
          ++known;
        } else {
          unexpected += " " + std::string(method_name(m)) + "/" +
                        std::string(metric_name(metric)) + "@" + std::to_string(n) +
                        "=" + std::to_string(got) + "!=" + std::to_string(y);
        }
      }
    }
  }
  // The two documented deviations must both actually occur.
  const bool oliveira_ancilla_off =
      formula_report(Method::kOliveira, 80, OperandCase::kEqual).ancilla != 241;
  const bool oliveira_delay_off =
      formula_report(Method::kOliveira, 2, OperandCase::kEqual).delay != 29;
  std::ostringstream d;
  d << points << " points: " << exact << " exact, " << known << " known deviations"
    << (unexpected.empty() ? "" : "; unexpected:" + unexpected);
  return {unexpected.empty() && known == 15 && oliveira_ancilla_off && oliveira_delay_off,
          d.str()};
}

Outcome ac5() {
  std::vector<std::int64_t> ns = {1};
  for (std::int64_t n = 10; n <= 100; n += 10) ns.push_back(n);
  const std::vector<std::int64_t> x = {4, 45, 90, 135, 180, 225, 270, 315, 360, 405, 450};
  const std::vector<std::int64_t> ccx = {2, 20, 40, 60, 80, 100, 120, 140, 160, 180, 200};
  const std::vector<std::int64_t> blocks = {1, 10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
  const std::vector<std::int64_t> meas = {2, 20, 40, 60, 80, 100, 120, 140, 160, 180, 200};
  int bad = 0;
  const auto a = gate_growth(ns);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const std::int64_t n = ns[i];
    const std::int64_t formula_x = 4 * n + (n - 1 + 1) / 2;
    if (static_cast<std::int64_t>(a[i].x_gates) != x[i] || formula_x != x[i]) ++bad;
    if (static_cast<std::int64_t>(a[i].ccx_gates) != ccx[i]) ++bad;
    if (static_cast<std::int64_t>(a[i].blocks_1bc) != blocks[i]) ++bad;
    if (static_cast<std::int64_t>(a[i].block_measures) != meas[i]) ++bad;
  }
  std::vector<std::int64_t> n10;
  for (std::int64_t n = 1; n <= 10; ++n) n10.push_back(n);
  const std::vector<std::int64_t> qubits = {4, 6, 8, 10, 12, 14, 16, 18, 20, 22};
  const std::vector<std::int64_t> width = {6, 8, 10, 12, 14, 16, 18, 20, 22, 24};
  const auto b = gate_growth(n10);
  for (std::size_t i = 0; i < n10.size(); ++i) {
    if (static_cast<std::int64_t>(b[i].qubits) != qubits[i]) ++bad;
    if (static_cast<std::int64_t>(b[i].width) != width[i]) ++bad;
  }
  return {bad == 0, std::to_string(ns.size() * 4 + n10.size() * 2) + " points, " +
                        std::to_string(bad) + " off"};
}

Outcome ac6() {
  int bad = 0;
  for (std::int64_t n = 1; n <= 100; ++n) {
    const Circuit body = comparator_body(static_cast<std::size_t>(n), BuilderVariant::kFigure);
    const std::int64_t expect = 14 * n + (n - 1 + 1) / 2;  // ceil((n-1)/2)
    const std::int64_t formula = formula_report(Method::kProposed, n, OperandCase::kUnequal).cost;
    if (total_unit_cost(body) != expect || formula != expect) ++bad;
  }
  return {bad == 0, "n=1..100, " + std::to_string(bad) + " mismatches"};
}

Outcome ac7() {
  const ComplexMatrix v = v_matrix().to_complex();
  const ComplexMatrix vd = v_matrix().adjoint().to_complex();
  double unit_err = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      std::complex<double> s = 0;
      for (std::size_t k = 0; k < 2; ++k) s += v[i * 2 + k] * vd[k * 2 + j];
      unit_err = std::max(unit_err, std::abs(s - std::complex<double>(i == j ? 1 : 0)));
    }
  }
  const bool v2x = v_matrix() * v_matrix() == unitary_of(GateKind::kX);

  Circuit dec(3, 0);
  for (const auto& i : decompose_ccx(Instruction::gate(GateKind::kCCX, {0, 1, 2}))) dec.append(i);
  const ComplexMatrix got = circuit_unitary(dec).to_complex();
  double dec_err = 0.0;
  for (std::size_t c = 0; c < 8; ++c) {
    const std::size_t r = c >= 6 ? (c ^ 1u) : c;
    for (std::size_t rr = 0; rr < 8; ++rr) {
      dec_err = std::max(dec_err, std::abs(got[rr * 8 + c] - std::complex<double>(rr == r ? 1 : 0)));
    }
  }

  std::uint64_t cases = 0, differ = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto variant : {BuilderVariant::kFigure, BuilderVariant::kAlgorithmic}) {
      const Circuit body = comparator_body(n, variant);
      const Circuit low = lower_circuit(body);
      const std::size_t nq = body.num_qubits();
      for (std::uint64_t basis = 0; basis < (1u << nq); ++basis) {
        const Bits init = from_u64(basis, nq);
        auto [r1, s1] = run_dense_state(body, init);
        auto [r2, s2] = run_dense_state(low, init);
        double diff = 0.0;
        for (std::size_t k = 0; k < s1.dim(); ++k)
          diff = std::max(diff, std::abs(s1.amplitude(k) - s2.amplitude(k)));
        ++cases;
        if (r1.classical_bits != r2.classical_bits ||
            r1.measurement_trace != r2.measurement_trace || diff > kDecompositionTol) {
          ++differ;
        }
      }
    }
  }
  std::ostringstream d;
  d << "|VV^-I|=" << unit_err << ", V^2==X " << (v2x ? "exact" : "NO")
    << ", |decomp-CCX|=" << dec_err << ", lowered " << cases << " basis runs, " << differ
    << " differ";
  return {unit_err < kUnitarityTol && v2x && dec_err < kDecompositionTol && differ == 0,
          d.str()};
}

Outcome ac8() {
  Clock clock;
  const NoiseModel noise{kAc8P, kAc8Q};
  auto run_width = [&](std::size_t n, int& argmax_hits) {
    const Operands ops = encode_operands(Bits(n, 0), Bits(n, 0));
    const Circuit circuit = build_gqbsc(ops, BuilderVariant::kFigure);
    const std::vector<std::uint8_t> zero(circuit.num_qubits(), 0);
    double total = 0.0;
    for (int s = 0; s < kAc8Seeds; ++s) {
      const Histogram h = sample(circuit, zero, kAc8Shots, noise, static_cast<std::uint64_t>(s));
      if (h.argmax() == 0) ++argmax_hits;
      total += h.probability(0);
    }
    return total / kAc8Seeds;
  };
  int hits1 = 0, hits3 = 0;
  const double p1 = run_width(1, hits1);
  const double p3 = run_width(3, hits3);
  const double seconds = clock.seconds();
  const double rate = static_cast<double>(hits1) / kAc8Seeds;
  std::ostringstream d;
  d << "n=1 argmax rate " << rate << ", mean P(expected) n=1 " << p1 << " vs n=3 " << p3
    << ", " << seconds << " s";
  return {rate >= kAc8ArgmaxRate && p3 < p1 && seconds < kAc8BudgetSeconds, d.str()};
}

Outcome ac9() {
  std::vector<std::size_t> widths;
  for (std::size_t n = 1; n <= 16; ++n) widths.push_back(n);
  widths.push_back(100);
  int structural_bad = 0;
  std::map<std::pair<std::size_t, int>, std::pair<Circuit, Circuit>> pairs;
  for (std::size_t n : widths) {
    for (auto v : {BuilderVariant::kFigure, BuilderVariant::kAlgorithmic}) {
      const Circuit body = comparator_body(n, v);
      const Circuit back = parse_qasm(export_qasm(body));
      if (!(back == body) || export_qasm(back) != export_qasm(body)) ++structural_bad;
      pairs.emplace(std::make_pair(n, static_cast<int>(v)), std::make_pair(body, back));
    }
  }
  std::mt19937_64 rng(2024);
  int semantic_bad = 0;
  constexpr int kPairs = 1000;
  for (int k = 0; k < kPairs; ++k) {
    const std::size_t n = widths[rng() % widths.size()];
    const int v = static_cast<int>(rng() % 2);
    Bits a(n), b(n);
    for (auto& x : a) x = rng() & 1u;
    for (auto& x : b) x = rng() & 1u;
    const Bits init = operand_basis_state({a, b});
    const auto& [body, back] = pairs.at({n, v});
    if (run_classical(body, init) != run_classical(back, init)) ++semantic_bad;
  }
  std::ostringstream d;
  d << widths.size() * 2 << " circuits, " << structural_bad << " structural diffs; " << kPairs
    << " random pairs, " << semantic_bad << " semantic diffs";
  return {structural_bad == 0 && semantic_bad == 0, d.str()};
}

std::string capture_process(const std::string& command) {
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) return "<popen failed>";
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), got);
  return out;
}

Outcome ac10(const std::string& binary) {
  const std::vector<std::vector<std::string>> invocations = {
      {"sweep", "--metric", "cost", "--n", "1,80:960:80,1000", "--format", "csv"},
      {"sweep", "--metric", "delay", "--n", "1:10", "--format", "json"},
      {"census", "--n", "1,10:100:10", "--format", "csv"},
      {"census", "--n", "1:10", "--format", "json"},
      {"compare", "--a", "630", "--b", "800", "--format", "json"},
      {"compare", "--a", "5", "--b", "6", "--shots", "1024", "--noise-p", "0.01",
       "--noise-q", "0.02", "--format", "json"},
      {"verify", "--max-bits", "128", "--samples", "20", "--format", "json"},
      {"build", "--a", "bin:1011", "--b", "bin:0110", "--format", "json"},
  };
  int differ = 0, runs = 0;
  for (auto args : invocations) {
    args.insert(args.begin(), "qcmp");
    std::ostringstream o1, o2, e1, e2;
    cli::run_cli(args, o1, e1);
    cli::run_cli(args, o2, e2);
    ++runs;
    if (o1.str() != o2.str() || o1.str().empty()) ++differ;
    if (!binary.empty()) {
      std::string cmd = binary;
      for (std::size_t i = 1; i < args.size(); ++i) cmd += " '" + args[i] + "'";
      cmd += " 2>/dev/null";
      const std::string p1 = capture_process(cmd);
      const std::string p2 = capture_process(cmd);
      ++runs;
      if (p1 != p2 || p1 != o1.str()) ++differ;
    }
  }
  return {differ == 0, std::to_string(runs) + " repeated invocations" +
                           (binary.empty() ? " (in-process only)" : "") + ", " +
                           std::to_string(differ) + " differ"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string binary = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1  exhaustive soundness n<=8", ac1},
      {"AC2  table rows", ac2},
      {"AC3  random pairs at n=1000", ac3},
      {"AC4  comparison-method formulas vs plotted points", ac4},
      {"AC5  gate census growth", ac5},
      {"AC6  body cost vs closed form", ac6},
      {"AC7  gate algebra and lowering", ac7},
      {"AC8  noise trend", ac8},
      {"AC9  qasm roundtrip", ac9},
      {"AC10 cli determinism", [&] { return ac10(binary); }},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << " -- " << o.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
