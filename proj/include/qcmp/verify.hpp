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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcmp/comparator.hpp"
#include "qcmp/simulator.hpp"

namespace qcmp {

struct VerifyConfig {
  std::size_t max_bits = 1000;
  /// Widths up to this are checked over all 4^n operand pairs.
  std::size_t exhaustive_bits = 8;
  /// Random pairs per sampled width above the exhaustive threshold.
  std::size_t samples = 100;
  std::vector<BuilderVariant> variants = {BuilderVariant::kFigure,
                                          BuilderVariant::kAlgorithmic};
  /// Classical always runs; dense additionally replays widths up to
  /// dense_max_bits and must reproduce the classical flags.
  bool include_dense = false;
  std::size_t dense_max_bits = 4;
  SimOptions sim_options;
  std::uint64_t seed = kDefaultSeed;
  /// Sampled widths; defaults to sampled_widths(exhaustive_bits, max_bits).
  std::optional<std::vector<std::size_t>> widths;
};

struct WidthReport {
  std::size_t n = 0;
  bool exhaustive = false;
  std::uint64_t pairs = 0;
  std::uint64_t checks = 0;
  std::uint64_t mismatches = 0;
};

struct VerifyReport {
  std::vector<WidthReport> widths;
  std::uint64_t pairs = 0;
  std::uint64_t checks = 0;
  std::uint64_t mismatches = 0;
  /// Up to ten human-readable mismatch descriptions.
  std::vector<std::string> examples;

  bool ok() const { return mismatches == 0; }
};

/// threshold+1, the powers of two strictly between, and max_bits.
std::vector<std::size_t> sampled_widths(std::size_t exhaustive_bits,
                                        std::size_t max_bits);

/// Random operand pairs of width n, mixing uniform, equal, single-bit-flip
/// and shared-prefix pairs so that late iterations are exercised.
std::vector<Operands> random_operand_pairs(std::size_t n, std::size_t count,
                                           std::uint64_t seed);

/// Checks every pair: class against integer comparison, flags against
/// reference_flags, and dense flags against classical flags.
VerifyReport verify_comparator(const VerifyConfig& config);

}  // namespace qcmp
