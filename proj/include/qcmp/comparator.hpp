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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcmp/circuit.hpp"
#include "qcmp/simulator.hpp"

namespace qcmp {

using BigInt = boost::multiprecision::cpp_int;

/// Bit sequence, most significant bit first.
using Bits = std::vector<std::uint8_t>;

Bits bits_from_string(std::string_view text);
Bits bits_from_integer(const BigInt& value);
BigInt integer_from_bits(const Bits& bits);
std::string bits_to_string(const Bits& bits);

/// Parses a decimal integer, or an explicit-width bitstring written
/// "bin:0101". Throws kInvalidBitstring or kEmptyOperand.
Bits parse_operand(std::string_view text);

/// Two operands of equal width n >= 1; index 0 is the most significant bit.
struct Operands {
  Bits a;
  Bits b;

  std::size_t n() const noexcept { return a.size(); }
  friend bool operator==(const Operands&, const Operands&) = default;
};

/// Left-pads the shorter operand with zeros to the longer one's width.
Operands encode_operands(Bits a, Bits b);
Operands encode_operands(const BigInt& a, const BigInt& b);
Operands encode_operands(std::string_view a, std::string_view b);

enum class BuilderVariant {
  /// Conditional r0 correction gated on register == 2 after odd iterations,
  /// as drawn in the 2-, 3- and 5-bit circuits.
  kFigure,
  /// Correction gated on r1 == 1 after every iteration, as in the pseudocode.
  kAlgorithmic,
};

std::string_view variant_name(BuilderVariant variant);
std::optional<BuilderVariant> variant_from_name(std::string_view name);

enum class ComparisonClass { kEqual, kGreater, kLess };

std::string_view class_name(ComparisonClass cls);

/// Qubit layout a_0..a_{n-1}, b_0..b_{n-1}, r_0, r_1; clbit 0 mirrors r_0
/// and clbit 1 mirrors r_1.
struct ComparatorLayout {
  std::size_t n = 0;

  QubitIndex a(std::size_t i) const { return static_cast<QubitIndex>(i); }
  QubitIndex b(std::size_t i) const { return static_cast<QubitIndex>(n + i); }
  QubitIndex r0() const { return static_cast<QubitIndex>(2 * n); }
  QubitIndex r1() const { return static_cast<QubitIndex>(2 * n + 1); }
  std::size_t num_qubits() const { return 2 * n + 2; }
  static constexpr ClbitIndex kC0 = 0;
  static constexpr ClbitIndex kC1 = 1;
  static constexpr std::size_t kNumClbits = 2;
};

/// One-bit comparator block: sets qr0 when a > b and qr1 when a < b, then
/// measures both flags. Bracketed by block markers; the optional condition is
/// attached to every gate. Restores qa and qb.
std::vector<Instruction> build_1bc(
    QubitIndex qa, QubitIndex qb, QubitIndex qr0, QubitIndex qr1,
    ClbitIndex c0, ClbitIndex c1,
    const std::optional<ClassicalCondition>& condition = std::nullopt);

/// Loop iterations i (1..n-1) followed by a conditional r0 correction.
std::vector<std::size_t> correction_sites(std::size_t n, BuilderVariant variant);

/// Value-independent comparator: n blocks plus corrections, no input prep.
Circuit comparator_body(std::size_t n, BuilderVariant variant);

/// Initial qubit values that load the operands into the body's layout.
Bits operand_basis_state(const Operands& ops);

/// Input-prep X gates for every 1 bit, followed by the body. Runs from |0…0>.
Circuit build_gqbsc(const Operands& ops, BuilderVariant variant);

ComparisonClass interpret(std::uint8_t r0, std::uint8_t r1);

struct Flags {
  std::uint8_t r0 = 0;
  std::uint8_t r1 = 0;

  friend bool operator==(const Flags&, const Flags&) = default;
};

/// Classical evaluation of the comparator recurrence for a variant.
Flags reference_flags(const Operands& ops, BuilderVariant variant);

/// Integer comparison of the two operands.
ComparisonClass integer_compare(const Operands& ops);

struct ComparisonOutcome {
  std::uint8_t r0 = 0;
  std::uint8_t r1 = 0;
  ComparisonClass cls = ComparisonClass::kEqual;
  Backend backend = Backend::kClassical;
  BuilderVariant variant = BuilderVariant::kFigure;
  std::size_t n = 0;
};

/// Encode, build, run and interpret.
ComparisonOutcome compare(const Operands& ops, Backend backend = Backend::kAuto,
                          BuilderVariant variant = BuilderVariant::kFigure,
                          std::optional<std::uint64_t> seed = std::nullopt,
                          const SimOptions& options = {});

}  // namespace qcmp
