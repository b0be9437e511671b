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

#include "qcmp/verify.hpp"

#include <algorithm>
#include <random>

#include "qcmp/errors.hpp"

namespace qcmp {

namespace {

Bits bits_of_value(std::uint64_t value, std::size_t n) {
  Bits bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = (value >> (n - 1 - i)) & 1u;
  return bits;
}

class PairChecker {
 public:
  PairChecker(const VerifyConfig& config, VerifyReport& report)
      : config_(config), report_(report) {}

  void begin_width(std::size_t n) {
    bodies_.clear();
    for (BuilderVariant v : config_.variants) {
      bodies_.push_back(comparator_body(n, v));
    }
    dense_ = config_.include_dense && n <= config_.dense_max_bits;
  }

  void check(const Operands& ops, WidthReport& width) {
    ++width.pairs;
    const ComparisonClass expected = integer_compare(ops);
    const Bits state = operand_basis_state(ops);
    for (std::size_t k = 0; k < bodies_.size(); ++k) {
      const BuilderVariant variant = config_.variants[k];
      const Flags want = reference_flags(ops, variant);
      const RunResult r = run_classical(bodies_[k], state);
      const Flags got{r.classical_bits[0], r.classical_bits[1]};
      record(width, ops, variant, Backend::kClassical,
             interpret(got.r0, got.r1) == expected && got == want);
      if (dense_) {
        const RunResult d = run_dense(bodies_[k], state, config_.seed,
                                      config_.sim_options);
        const Flags dense_flags{d.classical_bits[0], d.classical_bits[1]};
        record(width, ops, variant, Backend::kDense,
               interpret(dense_flags.r0, dense_flags.r1) == expected &&
                   dense_flags == got);
      }
    }
  }

 private:
  void record(WidthReport& width, const Operands& ops, BuilderVariant variant,
              Backend backend, bool pass) {
    ++width.checks;
    if (pass) return;
    ++width.mismatches;
    if (report_.examples.size() < 10) {
      report_.examples.push_back(
          "n=" + std::to_string(ops.n()) + " a=" + bits_to_string(ops.a) +
          " b=" + bits_to_string(ops.b) + " variant=" +
          std::string(variant_name(variant)) +
          " backend=" + std::string(backend_name(backend)));
    }
  }

  const VerifyConfig& config_;
  VerifyReport& report_;
  std::vector<Circuit> bodies_;
  bool dense_ = false;
};

}  // namespace

std::vector<std::size_t> sampled_widths(std::size_t exhaustive_bits,
                                        std::size_t max_bits) {
  std::vector<std::size_t> widths;
  if (max_bits <= exhaustive_bits) return widths;
  widths.push_back(exhaustive_bits + 1);
  for (std::size_t p = 1; p < max_bits; p *= 2) {
    if (p > exhaustive_bits + 1) widths.push_back(p);
  }
  widths.push_back(max_bits);
  std::sort(widths.begin(), widths.end());
  widths.erase(std::unique(widths.begin(), widths.end()), widths.end());
  return widths;
}

std::vector<Operands> random_operand_pairs(std::size_t n, std::size_t count,
                                           std::uint64_t seed) {
  std::mt19937_64 rng(derive_shot_seed(seed, n));
  auto random_bits = [&] {
    Bits bits(n);
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1u);
    return bits;
  };
  std::vector<Operands> pairs;
  pairs.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Bits a = random_bits();
    Bits b;
    switch (k % 4) {
      case 0:
        b = random_bits();
        break;
      case 1:
        b = a;
        break;
      case 2:
        b = a;
        b[rng() % n] ^= 1u;
        break;
      default: {
        b = random_bits();
        const std::size_t prefix = rng() % n;
        std::copy_n(a.begin(), prefix, b.begin());
        break;
      }
    }
    if (rng() & 1u) std::swap(a, b);
    pairs.push_back(Operands{std::move(a), std::move(b)});
  }
  return pairs;
}

VerifyReport verify_comparator(const VerifyConfig& config) {
  if (config.max_bits < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_bits must be at least 1");
  }
  if (config.variants.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no variants selected");
  }
  if (config.exhaustive_bits > 16) {
    throw Error(ErrorCode::kInvalidArgument,
                "exhaustive checking is limited to 16 bits");
  }
  VerifyReport report;
  PairChecker checker(config, report);

  const std::size_t exhaustive_top = std::min(config.exhaustive_bits, config.max_bits);
  for (std::size_t n = 1; n <= exhaustive_top; ++n) {
    WidthReport width{n, true};
    checker.begin_width(n);
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t a = 0; a < limit; ++a) {
      for (std::uint64_t b = 0; b < limit; ++b) {
        checker.check(Operands{bits_of_value(a, n), bits_of_value(b, n)}, width);
      }
    }
    report.widths.push_back(width);
  }

  const auto widths = config.widths.value_or(
      sampled_widths(config.exhaustive_bits, config.max_bits));
  for (std::size_t n : widths) {
    if (n < 1 || n > config.max_bits) {
      throw Error(ErrorCode::kInvalidArgument,
                  "sampled width " + std::to_string(n) + " outside 1..max_bits");
    }
    WidthReport width{n, false};
    checker.begin_width(n);
    for (const auto& ops : random_operand_pairs(n, config.samples, config.seed)) {
      checker.check(ops, width);
    }
    report.widths.push_back(width);
  }

  for (const auto& w : report.widths) {
    report.pairs += w.pairs;
    report.checks += w.checks;
    report.mismatches += w.mismatches;
  }
  return report;
}

}  // namespace qcmp
