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

#include "qcmp/gateset.hpp"

#include <boost/rational.hpp>

#include "qcmp/errors.hpp"

namespace qcmp {

namespace {

ExactMatrix controlled(const ExactMatrix& u) {
  const std::size_t d = u.dim();
  ExactMatrix out = ExactMatrix::identity(2 * d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) out.at(d + r, d + c) = u.at(r, c);
  }
  return out;
}

ExactMatrix pauli_x() {
  ExactMatrix x(2);
  x.at(0, 1) = 1;
  x.at(1, 0) = 1;
  return x;
}

std::size_t bit_position(QubitIndex q, std::size_t num_qubits) {
  return num_qubits - 1 - q;
}

}  // namespace

std::complex<double> ExactComplex::to_complex() const {
  return {boost::rational_cast<double>(re), boost::rational_cast<double>(im)};
}

ExactMatrix::ExactMatrix(std::size_t dim)
    : dim_(dim), entries_(dim * dim) {}

ExactMatrix::ExactMatrix(std::size_t dim, std::vector<ExactComplex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim * dim) {
    throw Error(ErrorCode::kInvalidArgument, "matrix entry count mismatch");
  }
}

ExactMatrix ExactMatrix::identity(std::size_t dim) {
  ExactMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::adjoint() const {
  ExactMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out.at(c, r) = at(r, c).conj();
  }
  return out;
}

ComplexMatrix ExactMatrix::to_complex() const {
  ComplexMatrix out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.to_complex());
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::kInvalidArgument, "matrix dimension mismatch");
  }
  const std::size_t d = a.dim();
  ExactMatrix out(d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t k = 0; k < d; ++k) {
      const auto& lhs = a.at(r, k);
      if (lhs == ExactComplex{}) continue;
      for (std::size_t c = 0; c < d; ++c) {
        out.at(r, c) = out.at(r, c) + lhs * b.at(k, c);
      }
    }
  }
  return out;
}

ExactMatrix v_matrix() {
  const Rational h(1, 2);
  // (1+i)/2 * [[1, -i], [-i, 1]] = [[(1+i)/2, (1-i)/2], [(1-i)/2, (1+i)/2]]
  return ExactMatrix(2, {{h, h}, {h, -h}, {h, -h}, {h, h}});
}

ExactMatrix vdg_matrix() {
  const Rational h(1, 2);
  // (1-i)/2 * [[1, i], [i, 1]] = [[(1-i)/2, (1+i)/2], [(1+i)/2, (1-i)/2]]
  return ExactMatrix(2, {{h, -h}, {h, h}, {h, h}, {h, -h}});
}

ExactMatrix unitary_of(GateKind kind) {
  switch (kind) {
    case GateKind::kX: return pauli_x();
    case GateKind::kCX: return controlled(pauli_x());
    case GateKind::kCCX: return controlled(controlled(pauli_x()));
    case GateKind::kCV: return controlled(v_matrix());
    case GateKind::kCVDG: return controlled(vdg_matrix());
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown gate kind");
}

ExactMatrix embed(GateKind kind, std::span<const QubitIndex> targets,
                  std::size_t num_qubits) {
  if (targets.size() != arity(kind)) {
    throw Error(ErrorCode::kArityMismatch, "embed: wrong target count");
  }
  for (QubitIndex q : targets) {
    if (q >= num_qubits) {
      throw Error(ErrorCode::kIndexOutOfRange, "embed: qubit out of range");
    }
  }
  const ExactMatrix u = unitary_of(kind);
  const std::size_t k = targets.size();
  const std::size_t dim = std::size_t{1} << num_qubits;

  std::uint64_t target_mask = 0;
  for (QubitIndex q : targets) {
    target_mask |= std::uint64_t{1} << bit_position(q, num_qubits);
  }
  // Sub-index bit (k-1-j) corresponds to targets[j].
  auto deposit = [&](std::size_t sub) {
    std::uint64_t idx = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if ((sub >> (k - 1 - j)) & 1u) {
        idx |= std::uint64_t{1} << bit_position(targets[j], num_qubits);
      }
    }
    return idx;
  };
  auto extract = [&](std::uint64_t idx) {
    std::size_t sub = 0;
    for (std::size_t j = 0; j < k; ++j) {
      sub = (sub << 1) |
            ((idx >> bit_position(targets[j], num_qubits)) & 1u);
    }
    return sub;
  };

  ExactMatrix out(dim);
  for (std::uint64_t col = 0; col < dim; ++col) {
    const std::uint64_t rest = col & ~target_mask;
    const std::size_t sub_in = extract(col);
    for (std::size_t sub_out = 0; sub_out < u.dim(); ++sub_out) {
      out.at(rest | deposit(sub_out), col) = u.at(sub_out, sub_in);
    }
  }
  return out;
}

ExactMatrix circuit_unitary(const Circuit& circuit) {
  ExactMatrix total = ExactMatrix::identity(std::size_t{1}
                                            << circuit.num_qubits());
  for (const auto& instr : circuit) {
    if (instr.as_barrier()) continue;
    const auto* g = instr.as_gate();
    if (!g || instr.condition) {
      throw Error(ErrorCode::kUnsupportedInstruction,
                  "circuit_unitary needs unconditioned gates only");
    }
    total = embed(g->kind, g->targets, circuit.num_qubits()) * total;
  }
  return total;
}

std::int64_t total_unit_cost(const Circuit& circuit) {
  std::int64_t cost = 0;
  for (const auto& instr : circuit) {
    if (const auto* g = instr.as_gate()) cost += unit_cost(g->kind);
  }
  return cost;
}

std::vector<Instruction> decompose_ccx(const Instruction& instr) {
  const auto* g = instr.as_gate();
  if (!g || g->kind != GateKind::kCCX) {
    throw Error(ErrorCode::kNotACCX, "decompose_ccx expects a CCX gate");
  }
  const QubitIndex a = g->targets[0];
  const QubitIndex b = g->targets[1];
  const QubitIndex c = g->targets[2];
  const auto& cond = instr.condition;
  return {
      Instruction::gate(GateKind::kCV, {a, c}, cond),
      Instruction::gate(GateKind::kCV, {b, c}, cond),
      Instruction::gate(GateKind::kCX, {a, b}, cond),
      Instruction::gate(GateKind::kCVDG, {b, c}, cond),
      Instruction::gate(GateKind::kCX, {a, b}, cond),
  };
}

Circuit lower_circuit(const Circuit& circuit) {
  Circuit out(circuit.num_qubits(), circuit.num_clbits());
  for (const auto& [q, name] : circuit.labels()) out.set_label(q, name);
  for (const auto& instr : circuit) {
    const auto* g = instr.as_gate();
    if (g && g->kind == GateKind::kCCX) {
      for (auto& part : decompose_ccx(instr)) out.append(std::move(part));
    } else {
      out.append(instr);
    }
  }
  return out;
}

}  // namespace qcmp
