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

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qcmp/circuit.hpp"

namespace qcmp {

/// Default seed used when a caller does not provide one.
inline constexpr std::uint64_t kDefaultSeed = 0x5eed'c0de'2024'0001ULL;

/// Per-gate depolarizing (uniform X/Y/Z on each touched qubit with
/// probability p) and symmetric readout flips with probability q.
struct NoiseModel {
  double depolarizing_per_gate = 0.0;
  double readout_flip = 0.0;

  void validate() const;
  bool noiseless() const {
    return depolarizing_per_gate == 0.0 && readout_flip == 0.0;
  }
};

struct MeasurementEvent {
  ClbitIndex clbit = 0;
  std::uint8_t value = 0;

  friend bool operator==(const MeasurementEvent&,
                         const MeasurementEvent&) = default;
};

struct RunResult {
  std::vector<std::uint8_t> classical_bits;
  std::vector<MeasurementEvent> measurement_trace;
  /// Census of instructions whose conditions fired. A block counts once its
  /// first gate fires.
  GateCensus executed_census;

  /// Little-endian value of the classical register (clbit 0 least
  /// significant). Requires at most 64 clbits.
  std::uint64_t register_value() const;

  friend bool operator==(const RunResult&, const RunResult&) = default;
};

struct Histogram {
  std::uint64_t shots = 0;
  std::map<std::uint64_t, std::uint64_t> counts;

  std::uint64_t count(std::uint64_t value) const;
  double probability(std::uint64_t value) const;
  /// Most frequent value; ties go to the smaller value.
  std::uint64_t argmax() const;

  friend bool operator==(const Histogram&, const Histogram&) = default;
};

enum class Backend { kAuto, kDense, kClassical };

std::string_view backend_name(Backend backend);
std::optional<Backend> backend_from_name(std::string_view name);

struct SimOptions {
  std::size_t dense_qubit_cap = 24;
  /// Verify the statevector norm after every operation.
  bool check_norm = true;
};

/// Dense amplitudes over 2^n basis states. Qubit 0 is the most significant
/// bit of the basis index, so |q0 q1 ... q_{n-1}> reads left to right.
class StateVector {
 public:
  StateVector() = default;
  static StateVector basis(std::span<const std::uint8_t> bits);

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::size_t dim() const noexcept { return amplitudes_.size(); }
  const std::vector<std::complex<double>>& amplitudes() const noexcept {
    return amplitudes_;
  }
  std::complex<double> amplitude(std::uint64_t index) const {
    return amplitudes_[index];
  }

  void apply_gate(GateKind kind, std::span<const QubitIndex> targets);
  /// 0 = X, 1 = Y, 2 = Z.
  void apply_pauli(QubitIndex qubit, int which);
  double probability_one(QubitIndex qubit) const;
  /// Projects onto `value` and renormalizes.
  void collapse(QubitIndex qubit, std::uint8_t value);
  double norm() const;

  std::uint64_t bit_of(QubitIndex qubit) const {
    return std::uint64_t{1} << (num_qubits_ - 1 - qubit);
  }

 private:
  void apply_controlled_2x2(std::uint64_t control_mask, std::uint64_t target,
                            const std::complex<double> (&u)[2][2]);

  std::size_t num_qubits_ = 0;
  std::vector<std::complex<double>> amplitudes_;
};

/// True when the circuit only uses X, CX and CCX.
bool is_classical_circuit(const Circuit& circuit);

Backend select_backend(const Circuit& circuit, Backend requested);

/// Statevector execution with mid-circuit measurement and classical control.
/// Throws kTooManyQubits above the cap and kNormDrift when the norm deviates
/// by more than 1e-6.
RunResult run_dense(const Circuit& circuit,
                    std::span<const std::uint8_t> initial_bits,
                    std::optional<std::uint64_t> seed = std::nullopt,
                    const SimOptions& options = {},
                    const NoiseModel* noise = nullptr);

/// Same as run_dense but also returns the final state.
std::pair<RunResult, StateVector> run_dense_state(
    const Circuit& circuit, std::span<const std::uint8_t> initial_bits,
    std::optional<std::uint64_t> seed = std::nullopt,
    const SimOptions& options = {}, const NoiseModel* noise = nullptr);

/// Bit-level execution for permutation-only circuits. Throws
/// kNonClassicalGate if CV or CV† is present.
RunResult run_classical(const Circuit& circuit,
                        std::span<const std::uint8_t> initial_bits,
                        std::optional<std::uint64_t> seed = std::nullopt,
                        const NoiseModel* noise = nullptr);

RunResult run(const Circuit& circuit, std::span<const std::uint8_t> initial_bits,
              Backend backend = Backend::kAuto,
              std::optional<std::uint64_t> seed = std::nullopt,
              const SimOptions& options = {});

std::uint64_t derive_shot_seed(std::uint64_t seed, std::uint64_t shot_index);

/// Repeats execution `shots` times with per-shot seeds derived from `seed`
/// and counts final register values.
Histogram sample(const Circuit& circuit,
                 std::span<const std::uint8_t> initial_bits,
                 std::uint64_t shots, const std::optional<NoiseModel>& noise,
                 std::uint64_t seed, Backend backend = Backend::kAuto,
                 const SimOptions& options = {});

}  // namespace qcmp
