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

#include <boost/rational.hpp>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qcmp/circuit.hpp"
#include "qcmp/gate_kind.hpp"

namespace qcmp {

using Rational = boost::rational<std::int64_t>;

/// Gaussian rational p + q i. Enough to represent every entry of X, CX, CCX,
/// V and V† and their products exactly.
struct ExactComplex {
  Rational re{0};
  Rational im{0};

  ExactComplex() = default;
  ExactComplex(Rational r, Rational i = Rational(0)) : re(r), im(i) {}
  ExactComplex(std::int64_t r) : re(r), im(0) {}

  ExactComplex conj() const { return {re, -im}; }
  std::complex<double> to_complex() const;

  friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const ExactComplex&, const ExactComplex&) = default;
};

using ComplexMatrix = std::vector<std::complex<double>>;

/// Square matrix, row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t dim);
  ExactMatrix(std::size_t dim, std::vector<ExactComplex> entries);

  static ExactMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const ExactComplex& at(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  ExactComplex& at(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }

  ExactMatrix adjoint() const;
  ComplexMatrix to_complex() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<ExactComplex> entries_;
};

/// V = (1+i)/2 [[1, -i], [-i, 1]]: square root of NOT.
ExactMatrix v_matrix();
/// V† = (1-i)/2 [[1, i], [i, 1]].
ExactMatrix vdg_matrix();

/// Full unitary of a gate over its own targets. Target 0 is the most
/// significant index bit, so for CX the basis order is |control target>.
ExactMatrix unitary_of(GateKind kind);

/// Quantum cost in Δ units: 1 for X, CX, CV, CV†; 5 for CCX.
constexpr std::int64_t unit_cost(GateKind kind) {
  return kind == GateKind::kCCX ? 5 : 1;
}
constexpr std::int64_t unit_delay(GateKind kind) { return unit_cost(kind); }

/// Embeds a gate acting on `targets` into the 2^num_qubits space, with qubit
/// 0 as the most significant basis-index bit.
ExactMatrix embed(GateKind kind, std::span<const QubitIndex> targets,
                  std::size_t num_qubits);

/// Product of all gates of an unconditioned, measurement-free circuit
/// (barriers ignored). Intended for small circuits.
ExactMatrix circuit_unitary(const Circuit& circuit);

/// Σ unit_cost over every gate instruction present.
std::int64_t total_unit_cost(const Circuit& circuit);

/// CCX(a, b, c) -> CV(a,c) CV(b,c) CX(a,b) CV†(b,c) CX(a,b). The condition
/// of the input, if any, is copied onto every emitted gate.
std::vector<Instruction> decompose_ccx(const Instruction& instr);

/// Replaces each CCX by its five-gate expansion; other instructions unchanged.
Circuit lower_circuit(const Circuit& circuit);

}  // namespace qcmp
