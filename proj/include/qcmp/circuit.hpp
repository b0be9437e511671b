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

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qcmp/gate_kind.hpp"

namespace qcmp {

using QubitIndex = std::uint32_t;
using ClbitIndex = std::uint32_t;

/// Equality test of a subset of classical bits against a constant. Bit k of
/// `value` is compared with clbit `clbits[k]`, so for clbits {0, 1} the
/// value is the little-endian register value (clbit 0 least significant).
struct ClassicalCondition {
  std::vector<ClbitIndex> clbits;
  std::uint64_t value = 0;

  /// Condition over clbits 0..width-1 as one register.
  static ClassicalCondition register_equals(std::size_t width,
                                            std::uint64_t value);
  static ClassicalCondition bit_equals(ClbitIndex clbit, bool value);

  bool covers_register(std::size_t num_clbits) const;
  bool evaluate(std::span<const std::uint8_t> bits) const;

  friend bool operator==(const ClassicalCondition&,
                         const ClassicalCondition&) = default;
};

struct GateOp {
  GateKind kind = GateKind::kX;
  std::vector<QubitIndex> targets;

  friend bool operator==(const GateOp&, const GateOp&) = default;
};

struct MeasureOp {
  QubitIndex qubit = 0;
  ClbitIndex clbit = 0;

  friend bool operator==(const MeasureOp&, const MeasureOp&) = default;
};

enum class BlockMarker { kBegin, kEnd };

/// Zero-cost marker delimiting a comparator block.
struct BarrierOp {
  BlockMarker marker = BlockMarker::kBegin;

  friend bool operator==(const BarrierOp&, const BarrierOp&) = default;
};

struct Instruction {
  std::variant<GateOp, MeasureOp, BarrierOp> op;
  std::optional<ClassicalCondition> condition;

  static Instruction gate(GateKind kind, std::vector<QubitIndex> targets,
                          std::optional<ClassicalCondition> condition = {});
  static Instruction measure(QubitIndex qubit, ClbitIndex clbit);
  static Instruction barrier(BlockMarker marker);

  const GateOp* as_gate() const { return std::get_if<GateOp>(&op); }
  const MeasureOp* as_measure() const { return std::get_if<MeasureOp>(&op); }
  const BarrierOp* as_barrier() const { return std::get_if<BarrierOp>(&op); }

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

/// Ordered dynamic circuit: fixed qubit/clbit widths and an append-only
/// instruction list executed in order.
class Circuit {
 public:
  Circuit() = default;
  Circuit(std::size_t num_qubits, std::size_t num_clbits);

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::size_t num_clbits() const noexcept { return num_clbits_; }
  std::size_t width_total() const noexcept { return num_qubits_ + num_clbits_; }
  std::size_t size() const noexcept { return instructions_.size(); }
  bool empty() const noexcept { return instructions_.empty(); }

  const std::vector<Instruction>& instructions() const noexcept {
    return instructions_;
  }
  auto begin() const { return instructions_.begin(); }
  auto end() const { return instructions_.end(); }

  /// Validates and appends. Throws Error with kIndexOutOfRange,
  /// kArityMismatch, kDuplicateTarget or kInvalidCondition.
  void append(Instruction instr);

  Circuit& gate(GateKind kind, std::vector<QubitIndex> targets,
                std::optional<ClassicalCondition> condition = {});
  Circuit& x(QubitIndex q, std::optional<ClassicalCondition> condition = {});
  Circuit& cx(QubitIndex control, QubitIndex target);
  Circuit& ccx(QubitIndex c0, QubitIndex c1, QubitIndex target,
               std::optional<ClassicalCondition> condition = {});
  Circuit& measure(QubitIndex qubit, ClbitIndex clbit);
  Circuit& barrier(BlockMarker marker);

  void set_label(QubitIndex qubit, std::string name);
  const std::map<QubitIndex, std::string>& labels() const noexcept {
    return labels_;
  }

  /// Structural equality: widths and instruction sequence. Labels are
  /// presentation only and do not participate.
  friend bool operator==(const Circuit& lhs, const Circuit& rhs) {
    return lhs.num_qubits_ == rhs.num_qubits_ &&
           lhs.num_clbits_ == rhs.num_clbits_ &&
           lhs.instructions_ == rhs.instructions_;
  }

 private:
  void validate(const Instruction& instr) const;

  std::size_t num_qubits_ = 0;
  std::size_t num_clbits_ = 0;
  std::vector<Instruction> instructions_;
  std::map<QubitIndex, std::string> labels_;
};

Circuit new_circuit(std::size_t num_qubits, std::size_t num_clbits);

/// Appends every instruction of `tail` to a copy of `head`. Widths must match.
Circuit concat(const Circuit& head, const Circuit& tail);

struct GateCensus {
  std::array<std::size_t, kNumGateKinds> gate_counts{};
  std::size_t measure_count = 0;
  /// X instructions carrying a classical condition.
  std::size_t conditional_x_count = 0;
  /// Number of block-begin markers.
  std::size_t block_count_1bc = 0;
  /// Measurements that sit between a block's begin and end markers.
  std::size_t block_measure_count = 0;
  std::size_t width_qubits = 0;
  std::size_t width_total = 0;

  std::size_t count(GateKind kind) const { return gate_counts[index_of(kind)]; }
  std::size_t total_gates() const;

  void record(const Instruction& instr, bool inside_block);

  friend bool operator==(const GateCensus&, const GateCensus&) = default;
};

/// Counts every instruction present, whether or not its condition would fire.
GateCensus static_census(const Circuit& circuit);

struct DelayTable {
  std::map<GateKind, std::int64_t> gate_delay;
  std::int64_t measure_delay = 0;
  /// Extra latency between a measurement and an instruction conditioned on it.
  std::int64_t feedforward_delay = 0;
};

/// X, CX, CV, CV† = 1, CCX = 5, measurement and feed-forward = 0.
DelayTable default_delay_table();

/// Critical path under as-soon-as-possible layering. An instruction waits for
/// the last prior instruction on each of its qubits; a conditioned
/// instruction also waits for the last measurement into each condition bit.
/// Throws kMissingDelayEntry when a present gate kind has no delay.
std::int64_t structural_depth(const Circuit& circuit, const DelayTable& delays);

}  // namespace qcmp
