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

#include "qcmp/comparator.hpp"

#include <algorithm>
#include <cctype>

#include "qcmp/errors.hpp"

namespace qcmp {

namespace {

const ClassicalCondition& both_flags_clear() {
  static const ClassicalCondition kCond = ClassicalCondition::register_equals(2, 0);
  return kCond;
}

// Register value 2: r1 set, r0 clear.
const ClassicalCondition& less_detected() {
  static const ClassicalCondition kCond = ClassicalCondition::register_equals(2, 2);
  return kCond;
}

const ClassicalCondition& r1_set() {
  static const ClassicalCondition kCond =
      ClassicalCondition::bit_equals(ComparatorLayout::kC1, true);
  return kCond;
}

void append_all(Circuit& circuit, std::vector<Instruction> instrs) {
  for (auto& instr : instrs) circuit.append(std::move(instr));
}

}  // namespace

Bits bits_from_string(std::string_view text) {
  if (text.empty()) {
    throw Error(ErrorCode::kEmptyOperand, "operand has no bits");
  }
  Bits bits;
  bits.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw Error(ErrorCode::kInvalidBitstring,
                  "invalid bit '" + std::string(1, ch) + "' in operand");
    }
    bits.push_back(ch == '1' ? 1 : 0);
  }
  return bits;
}

Bits bits_from_integer(const BigInt& value) {
  if (value < 0) {
    throw Error(ErrorCode::kInvalidBitstring, "operands must be non-negative");
  }
  if (value == 0) return {0};
  Bits bits;
  const std::size_t width = boost::multiprecision::msb(value) + 1;
  bits.reserve(width);
  for (std::size_t k = width; k-- > 0;) {
    bits.push_back(boost::multiprecision::bit_test(value, k) ? 1 : 0);
  }
  return bits;
}

BigInt integer_from_bits(const Bits& bits) {
  BigInt v = 0;
  for (auto b : bits) {
    v <<= 1;
    if (b) v |= 1;
  }
  return v;
}

std::string bits_to_string(const Bits& bits) {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

Bits parse_operand(std::string_view text) {
  constexpr std::string_view kBinPrefix = "bin:";
  if (text.starts_with(kBinPrefix)) {
    return bits_from_string(text.substr(kBinPrefix.size()));
  }
  if (text.empty()) {
    throw Error(ErrorCode::kEmptyOperand, "operand is empty");
  }
  if (!std::all_of(text.begin(), text.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw Error(ErrorCode::kInvalidBitstring,
                "operand '" + std::string(text) +
                    "' is neither a decimal integer nor bin:<bits>");
  }
  return bits_from_integer(BigInt(std::string(text)));
}

Operands encode_operands(Bits a, Bits b) {
  if (a.empty() || b.empty()) {
    throw Error(ErrorCode::kEmptyOperand, "operand has no bits");
  }
  for (const Bits* bits : {&a, &b}) {
    if (std::any_of(bits->begin(), bits->end(), [](auto v) { return v > 1; })) {
      throw Error(ErrorCode::kInvalidBitstring, "bits must be 0 or 1");
    }
  }
  const std::size_t n = std::max(a.size(), b.size());
  a.insert(a.begin(), n - a.size(), 0);
  b.insert(b.begin(), n - b.size(), 0);
  return Operands{std::move(a), std::move(b)};
}

Operands encode_operands(const BigInt& a, const BigInt& b) {
  return encode_operands(bits_from_integer(a), bits_from_integer(b));
}

Operands encode_operands(std::string_view a, std::string_view b) {
  return encode_operands(parse_operand(a), parse_operand(b));
}

std::string_view variant_name(BuilderVariant variant) {
  return variant == BuilderVariant::kFigure ? "figure" : "algorithmic";
}

std::optional<BuilderVariant> variant_from_name(std::string_view name) {
  if (name == "figure") return BuilderVariant::kFigure;
  if (name == "algorithmic") return BuilderVariant::kAlgorithmic;
  return std::nullopt;
}

std::string_view class_name(ComparisonClass cls) {
  switch (cls) {
    case ComparisonClass::kEqual: return "Equal";
    case ComparisonClass::kGreater: return "Greater";
    case ComparisonClass::kLess: return "Less";
  }
  return "?";
}

std::vector<Instruction> build_1bc(
    QubitIndex qa, QubitIndex qb, QubitIndex qr0, QubitIndex qr1,
    ClbitIndex c0, ClbitIndex c1,
    const std::optional<ClassicalCondition>& condition) {
  const std::array<QubitIndex, 4> qubits = {qa, qb, qr0, qr1};
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    for (std::size_t j = i + 1; j < qubits.size(); ++j) {
      if (qubits[i] == qubits[j]) {
        throw Error(ErrorCode::kDuplicateTarget,
                    "1-bit comparator needs four distinct qubits");
      }
    }
  }
  // r0 ^= a & !b, then r1 ^= !a & b; the trailing X gates restore a and b.
  return {
      Instruction::barrier(BlockMarker::kBegin),
      Instruction::gate(GateKind::kX, {qb}, condition),
      Instruction::gate(GateKind::kCCX, {qa, qb, qr0}, condition),
      Instruction::gate(GateKind::kX, {qa}, condition),
      Instruction::gate(GateKind::kX, {qb}, condition),
      Instruction::gate(GateKind::kCCX, {qa, qb, qr1}, condition),
      Instruction::gate(GateKind::kX, {qa}, condition),
      Instruction::measure(qr0, c0),
      Instruction::measure(qr1, c1),
      Instruction::barrier(BlockMarker::kEnd),
  };
}

std::vector<std::size_t> correction_sites(std::size_t n,
                                          BuilderVariant variant) {
  std::vector<std::size_t> sites;
  for (std::size_t i = 1; i < n; ++i) {
    if (variant == BuilderVariant::kAlgorithmic || i % 2 == 1) {
      sites.push_back(i);
    }
  }
  return sites;
}

Circuit comparator_body(std::size_t n, BuilderVariant variant) {
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "comparator width must be >= 1");
  }
  const ComparatorLayout layout{n};
  Circuit circuit(layout.num_qubits(), ComparatorLayout::kNumClbits);
  for (std::size_t i = 0; i < n; ++i) {
    circuit.set_label(layout.a(i), "a_" + std::to_string(i));
    circuit.set_label(layout.b(i), "b_" + std::to_string(i));
  }
  circuit.set_label(layout.r0(), "r_0");
  circuit.set_label(layout.r1(), "r_1");

  const auto sites = correction_sites(n, variant);
  auto next_site = sites.begin();
  const ClassicalCondition& correction =
      variant == BuilderVariant::kFigure ? less_detected() : r1_set();

  for (std::size_t i = 0; i < n; ++i) {
    std::optional<ClassicalCondition> guard;
    if (i > 0) guard = both_flags_clear();
    append_all(circuit, build_1bc(layout.a(i), layout.b(i), layout.r0(),
                                  layout.r1(), ComparatorLayout::kC0,
                                  ComparatorLayout::kC1, guard));
    if (next_site != sites.end() && *next_site == i) {
      circuit.x(layout.r0(), correction);
      circuit.measure(layout.r0(), ComparatorLayout::kC0);
      ++next_site;
    }
  }
  return circuit;
}

Bits operand_basis_state(const Operands& ops) {
  const ComparatorLayout layout{ops.n()};
  Bits state(layout.num_qubits(), 0);
  for (std::size_t i = 0; i < ops.n(); ++i) {
    state[layout.a(i)] = ops.a[i];
    state[layout.b(i)] = ops.b[i];
  }
  return state;
}

Circuit build_gqbsc(const Operands& ops, BuilderVariant variant) {
  const Circuit body = comparator_body(ops.n(), variant);
  const ComparatorLayout layout{ops.n()};
  Circuit circuit(body.num_qubits(), body.num_clbits());
  for (const auto& [q, name] : body.labels()) circuit.set_label(q, name);
  for (std::size_t i = 0; i < ops.n(); ++i) {
    if (ops.a[i]) circuit.x(layout.a(i));
  }
  for (std::size_t i = 0; i < ops.n(); ++i) {
    if (ops.b[i]) circuit.x(layout.b(i));
  }
  for (const auto& instr : body) circuit.append(instr);
  return circuit;
}

ComparisonClass interpret(std::uint8_t r0, std::uint8_t r1) {
  if (r1) return ComparisonClass::kLess;
  if (r0) return ComparisonClass::kGreater;
  return ComparisonClass::kEqual;
}

Flags reference_flags(const Operands& ops, BuilderVariant variant) {
  Flags f;
  for (std::size_t i = 0; i < ops.n(); ++i) {
    if (f.r0 == 0 && f.r1 == 0) {
      f.r0 = ops.a[i] & (ops.b[i] ^ 1u);
      f.r1 = (ops.a[i] ^ 1u) & ops.b[i];
    }
    if (i == 0) continue;
    if (variant == BuilderVariant::kFigure) {
      if (i % 2 == 1 && f.r0 == 0 && f.r1 == 1) f.r0 = 1;
    } else if (f.r1 == 1) {
      f.r0 ^= 1u;
    }
  }
  return f;
}

ComparisonClass integer_compare(const Operands& ops) {
  const BigInt a = integer_from_bits(ops.a);
  const BigInt b = integer_from_bits(ops.b);
  if (a > b) return ComparisonClass::kGreater;
  if (a < b) return ComparisonClass::kLess;
  return ComparisonClass::kEqual;
}

ComparisonOutcome compare(const Operands& ops, Backend backend,
                          BuilderVariant variant,
                          std::optional<std::uint64_t> seed,
                          const SimOptions& options) {
  const Circuit circuit = build_gqbsc(ops, variant);
  const Backend chosen = select_backend(circuit, backend);
  const Bits zeros(circuit.num_qubits(), 0);
  const RunResult r = run(circuit, zeros, chosen, seed, options);
  ComparisonOutcome out;
  out.r0 = r.classical_bits[ComparatorLayout::kC0];
  out.r1 = r.classical_bits[ComparatorLayout::kC1];
  out.cls = interpret(out.r0, out.r1);
  out.backend = chosen;
  out.variant = variant;
  out.n = ops.n();
  return out;
}

}  // namespace qcmp
