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

#include "qcmp/circuit.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "qcmp/errors.hpp"

namespace qcmp {

std::string_view mnemonic(GateKind kind) {
  switch (kind) {
    case GateKind::kX: return "x";
    case GateKind::kCX: return "cx";
    case GateKind::kCCX: return "ccx";
    case GateKind::kCV: return "cv";
    case GateKind::kCVDG: return "cvdg";
  }
  return "?";
}

std::optional<GateKind> gate_kind_from_mnemonic(std::string_view name) {
  for (GateKind kind : kAllGateKinds) {
    if (mnemonic(kind) == name) return kind;
  }
  return std::nullopt;
}

ClassicalCondition ClassicalCondition::register_equals(std::size_t width,
                                                       std::uint64_t value) {
  ClassicalCondition cond;
  cond.clbits.resize(width);
  std::iota(cond.clbits.begin(), cond.clbits.end(), ClbitIndex{0});
  cond.value = value;
  return cond;
}

ClassicalCondition ClassicalCondition::bit_equals(ClbitIndex clbit,
                                                  bool value) {
  return ClassicalCondition{{clbit}, value ? 1u : 0u};
}

bool ClassicalCondition::covers_register(std::size_t num_clbits) const {
  if (clbits.size() != num_clbits) return false;
  for (std::size_t k = 0; k < clbits.size(); ++k) {
    if (clbits[k] != k) return false;
  }
  return true;
}

bool ClassicalCondition::evaluate(std::span<const std::uint8_t> bits) const {
  for (std::size_t k = 0; k < clbits.size(); ++k) {
    const bool want = ((value >> k) & 1u) != 0;
    if ((bits[clbits[k]] != 0) != want) return false;
  }
  return true;
}

Instruction Instruction::gate(GateKind kind, std::vector<QubitIndex> targets,
                              std::optional<ClassicalCondition> condition) {
  return Instruction{GateOp{kind, std::move(targets)}, std::move(condition)};
}

Instruction Instruction::measure(QubitIndex qubit, ClbitIndex clbit) {
  return Instruction{MeasureOp{qubit, clbit}, std::nullopt};
}

Instruction Instruction::barrier(BlockMarker marker) {
  return Instruction{BarrierOp{marker}, std::nullopt};
}

Circuit::Circuit(std::size_t num_qubits, std::size_t num_clbits)
    : num_qubits_(num_qubits), num_clbits_(num_clbits) {}

Circuit new_circuit(std::size_t num_qubits, std::size_t num_clbits) {
  return Circuit(num_qubits, num_clbits);
}

void Circuit::validate(const Instruction& instr) const {
  auto check_qubit = [&](QubitIndex q) {
    if (q >= num_qubits_) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "qubit " + std::to_string(q) + " out of range for " +
                      std::to_string(num_qubits_) + " qubits");
    }
  };
  auto check_clbit = [&](ClbitIndex c) {
    if (c >= num_clbits_) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "clbit " + std::to_string(c) + " out of range for " +
                      std::to_string(num_clbits_) + " clbits");
    }
  };

  if (const auto* g = instr.as_gate()) {
    if (g->targets.size() != arity(g->kind)) {
      throw Error(ErrorCode::kArityMismatch,
                  std::string(mnemonic(g->kind)) + " takes " +
                      std::to_string(arity(g->kind)) + " targets, got " +
                      std::to_string(g->targets.size()));
    }
    for (QubitIndex q : g->targets) check_qubit(q);
    for (std::size_t i = 0; i < g->targets.size(); ++i) {
      for (std::size_t j = i + 1; j < g->targets.size(); ++j) {
        if (g->targets[i] == g->targets[j]) {
          throw Error(ErrorCode::kDuplicateTarget,
                      "qubit " + std::to_string(g->targets[i]) +
                          " used twice in " + std::string(mnemonic(g->kind)));
        }
      }
    }
  } else if (const auto* m = instr.as_measure()) {
    check_qubit(m->qubit);
    check_clbit(m->clbit);
  }

  if (instr.condition) {
    if (!instr.as_gate()) {
      throw Error(ErrorCode::kInvalidCondition,
                  "only gate instructions may carry a condition");
    }
    const auto& cond = *instr.condition;
    if (cond.clbits.empty() || cond.clbits.size() > 63) {
      throw Error(ErrorCode::kInvalidCondition,
                  "condition must read between 1 and 63 clbits");
    }
    std::unordered_set<ClbitIndex> seen;
    for (ClbitIndex c : cond.clbits) {
      check_clbit(c);
      if (!seen.insert(c).second) {
        throw Error(ErrorCode::kInvalidCondition,
                    "clbit " + std::to_string(c) + " repeated in condition");
      }
    }
    if (cond.value >= (std::uint64_t{1} << cond.clbits.size())) {
      throw Error(ErrorCode::kValueTooLarge,
                  "condition value " + std::to_string(cond.value) +
                      " does not fit in " + std::to_string(cond.clbits.size()) +
                      " bits");
    }
  }
}

void Circuit::append(Instruction instr) {
  validate(instr);
  instructions_.push_back(std::move(instr));
}

Circuit& Circuit::gate(GateKind kind, std::vector<QubitIndex> targets,
                       std::optional<ClassicalCondition> condition) {
  append(Instruction::gate(kind, std::move(targets), std::move(condition)));
  return *this;
}

Circuit& Circuit::x(QubitIndex q, std::optional<ClassicalCondition> condition) {
  return gate(GateKind::kX, {q}, std::move(condition));
}

Circuit& Circuit::cx(QubitIndex control, QubitIndex target) {
  return gate(GateKind::kCX, {control, target});
}

Circuit& Circuit::ccx(QubitIndex c0, QubitIndex c1, QubitIndex target,
                      std::optional<ClassicalCondition> condition) {
  return gate(GateKind::kCCX, {c0, c1, target}, std::move(condition));
}

Circuit& Circuit::measure(QubitIndex qubit, ClbitIndex clbit) {
  append(Instruction::measure(qubit, clbit));
  return *this;
}

Circuit& Circuit::barrier(BlockMarker marker) {
  append(Instruction::barrier(marker));
  return *this;
}

void Circuit::set_label(QubitIndex qubit, std::string name) {
  if (qubit >= num_qubits_) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "label for qubit " + std::to_string(qubit) + " out of range");
  }
  labels_[qubit] = std::move(name);
}

Circuit concat(const Circuit& head, const Circuit& tail) {
  if (head.num_qubits() != tail.num_qubits() ||
      head.num_clbits() != tail.num_clbits()) {
    throw Error(ErrorCode::kInvalidArgument,
                "concat requires circuits of identical widths");
  }
  Circuit out = head;
  for (const auto& instr : tail) out.append(instr);
  for (const auto& [q, name] : tail.labels()) {
    if (!out.labels().contains(q)) out.set_label(q, name);
  }
  return out;
}

std::size_t GateCensus::total_gates() const {
  return std::accumulate(gate_counts.begin(), gate_counts.end(),
                         std::size_t{0});
}

void GateCensus::record(const Instruction& instr, bool inside_block) {
  if (const auto* g = instr.as_gate()) {
    ++gate_counts[index_of(g->kind)];
    if (g->kind == GateKind::kX && instr.condition) ++conditional_x_count;
  } else if (instr.as_measure()) {
    ++measure_count;
    if (inside_block) ++block_measure_count;
  } else if (const auto* b = instr.as_barrier()) {
    if (b->marker == BlockMarker::kBegin) ++block_count_1bc;
  }
}

GateCensus static_census(const Circuit& circuit) {
  GateCensus census;
  census.width_qubits = circuit.num_qubits();
  census.width_total = circuit.width_total();
  bool inside_block = false;
  for (const auto& instr : circuit) {
    if (const auto* b = instr.as_barrier()) {
      inside_block = b->marker == BlockMarker::kBegin;
    }
    census.record(instr, inside_block);
  }
  return census;
}

DelayTable default_delay_table() {
  DelayTable table;
  table.gate_delay = {{GateKind::kX, 1},
                      {GateKind::kCX, 1},
                      {GateKind::kCCX, 5},
                      {GateKind::kCV, 1},
                      {GateKind::kCVDG, 1}};
  return table;
}

std::int64_t structural_depth(const Circuit& circuit,
                              const DelayTable& delays) {
  std::vector<std::int64_t> qubit_ready(circuit.num_qubits(), 0);
  // Finish time of the last measurement written into each clbit.
  std::vector<std::optional<std::int64_t>> clbit_ready(circuit.num_clbits());
  std::int64_t depth = 0;

  for (const auto& instr : circuit) {
    if (instr.as_barrier()) continue;

    std::int64_t start = 0;
    std::int64_t delay = 0;
    std::span<const QubitIndex> touched;
    QubitIndex measured = 0;

    if (const auto* g = instr.as_gate()) {
      auto it = delays.gate_delay.find(g->kind);
      if (it == delays.gate_delay.end()) {
        throw Error(ErrorCode::kMissingDelayEntry,
                    "no delay entry for " + std::string(mnemonic(g->kind)));
      }
      delay = it->second;
      touched = g->targets;
    } else {
      const auto* m = instr.as_measure();
      measured = m->qubit;
      touched = std::span<const QubitIndex>(&measured, 1);
      delay = delays.measure_delay;
    }

    for (QubitIndex q : touched) start = std::max(start, qubit_ready[q]);
    if (instr.condition) {
      for (ClbitIndex c : instr.condition->clbits) {
        if (clbit_ready[c]) {
          start = std::max(start, *clbit_ready[c] + delays.feedforward_delay);
        }
      }
    }

    const std::int64_t finish = start + delay;
    for (QubitIndex q : touched) qubit_ready[q] = finish;
    if (const auto* m = instr.as_measure()) clbit_ready[m->clbit] = finish;
    depth = std::max(depth, finish);
  }
  return depth;
}

}  // namespace qcmp
