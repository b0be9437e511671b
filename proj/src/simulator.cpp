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

#include "qcmp/simulator.hpp"

#include <cmath>
#include <random>

#include "qcmp/errors.hpp"
#include "qcmp/gateset.hpp"

namespace qcmp {

namespace {

constexpr double kDeterministicMass = 1e-12;
constexpr double kNormTolerance = 1e-6;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Portable draws: the standard distributions are implementation-defined, which
// would break byte-identical output across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  int below3() { return static_cast<int>(uniform() * 3.0); }

 private:
  std::mt19937_64 engine_;
};

class ClassicalState {
 public:
  explicit ClassicalState(std::span<const std::uint8_t> bits)
      : bits_(bits.begin(), bits.end()) {}

  void apply_gate(GateKind kind, std::span<const QubitIndex> t) {
    switch (kind) {
      case GateKind::kX: bits_[t[0]] ^= 1u; break;
      case GateKind::kCX: bits_[t[1]] ^= bits_[t[0]]; break;
      case GateKind::kCCX: bits_[t[2]] ^= bits_[t[0]] & bits_[t[1]]; break;
      default:
        throw Error(ErrorCode::kNonClassicalGate,
                    std::string(mnemonic(kind)) + " is not a permutation gate");
    }
  }

  // Y = iXZ flips the bit up to phase; Z only contributes a global phase.
  void apply_pauli(QubitIndex q, int which) {
    if (which != 2) bits_[q] ^= 1u;
  }

  std::uint8_t measure(QubitIndex q, Rng&) { return bits_[q]; }
  void after_operation() const {}

 private:
  std::vector<std::uint8_t> bits_;
};

class DenseState {
 public:
  DenseState(std::span<const std::uint8_t> bits, const SimOptions& options)
      : state_(StateVector::basis(bits)), check_norm_(options.check_norm) {}

  void apply_gate(GateKind kind, std::span<const QubitIndex> t) {
    state_.apply_gate(kind, t);
  }
  void apply_pauli(QubitIndex q, int which) { state_.apply_pauli(q, which); }

  std::uint8_t measure(QubitIndex q, Rng& rng) {
    const double p1 = state_.probability_one(q);
    std::uint8_t value;
    if (p1 >= 1.0 - kDeterministicMass) {
      value = 1;
    } else if (p1 <= kDeterministicMass) {
      value = 0;
    } else {
      value = rng.uniform() < p1 ? 1 : 0;
    }
    state_.collapse(q, value);
    return value;
  }

  void after_operation() const {
    if (!check_norm_) return;
    const double n = state_.norm();
    if (std::abs(n - 1.0) > kNormTolerance) {
      throw Error(ErrorCode::kNormDrift,
                  "statevector norm drifted to " + std::to_string(n));
    }
  }

  StateVector& state() { return state_; }

 private:
  StateVector state_;
  bool check_norm_;
};

template <class State>
RunResult execute(const Circuit& circuit, State& state, Rng& rng,
                  const NoiseModel* noise) {
  RunResult result;
  result.classical_bits.assign(circuit.num_clbits(), 0);
  auto& census = result.executed_census;
  census.width_qubits = circuit.num_qubits();
  census.width_total = circuit.width_total();

  const double p = noise ? noise->depolarizing_per_gate : 0.0;
  const double q = noise ? noise->readout_flip : 0.0;
  bool inside_block = false;
  bool block_pending = false;

  for (const auto& instr : circuit) {
    if (const auto* b = instr.as_barrier()) {
      inside_block = b->marker == BlockMarker::kBegin;
      block_pending = inside_block;
      continue;
    }
    if (instr.condition && !instr.condition->evaluate(result.classical_bits)) {
      continue;
    }
    if (const auto* g = instr.as_gate()) {
      state.apply_gate(g->kind, g->targets);
      if (block_pending) {
        ++census.block_count_1bc;
        block_pending = false;
      }
      census.record(instr, inside_block);
      if (p > 0.0) {
        for (QubitIndex t : g->targets) {
          if (rng.uniform() < p) state.apply_pauli(t, rng.below3());
        }
      }
    } else if (const auto* m = instr.as_measure()) {
      std::uint8_t value = state.measure(m->qubit, rng);
      if (q > 0.0 && rng.uniform() < q) value ^= 1u;
      result.classical_bits[m->clbit] = value;
      result.measurement_trace.push_back({m->clbit, value});
      census.record(instr, inside_block);
    }
    state.after_operation();
  }
  return result;
}

void check_initial_bits(const Circuit& circuit,
                        std::span<const std::uint8_t> bits) {
  if (bits.size() != circuit.num_qubits()) {
    throw Error(ErrorCode::kInvalidArgument,
                "initial state has " + std::to_string(bits.size()) +
                    " bits for " + std::to_string(circuit.num_qubits()) +
                    " qubits");
  }
  for (auto b : bits) {
    if (b > 1) {
      throw Error(ErrorCode::kInvalidArgument, "initial bits must be 0 or 1");
    }
  }
}

}  // namespace

void NoiseModel::validate() const {
  auto in_range = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!in_range(depolarizing_per_gate) || !in_range(readout_flip)) {
    throw Error(ErrorCode::kInvalidArgument,
                "noise probabilities must lie in [0, 1]");
  }
}

std::uint64_t RunResult::register_value() const {
  if (classical_bits.size() > 64) {
    throw Error(ErrorCode::kInvalidArgument, "register wider than 64 bits");
  }
  std::uint64_t v = 0;
  for (std::size_t k = 0; k < classical_bits.size(); ++k) {
    if (classical_bits[k]) v |= std::uint64_t{1} << k;
  }
  return v;
}

std::uint64_t Histogram::count(std::uint64_t value) const {
  auto it = counts.find(value);
  return it == counts.end() ? 0 : it->second;
}

double Histogram::probability(std::uint64_t value) const {
  return shots == 0 ? 0.0
                    : static_cast<double>(count(value)) /
                          static_cast<double>(shots);
}

std::uint64_t Histogram::argmax() const {
  std::uint64_t best = 0;
  std::uint64_t best_count = 0;
  for (const auto& [value, c] : counts) {
    if (c > best_count) {
      best = value;
      best_count = c;
    }
  }
  return best;
}

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::kAuto: return "auto";
    case Backend::kDense: return "dense";
    case Backend::kClassical: return "classical";
  }
  return "?";
}

std::optional<Backend> backend_from_name(std::string_view name) {
  for (Backend b : {Backend::kAuto, Backend::kDense, Backend::kClassical}) {
    if (backend_name(b) == name) return b;
  }
  return std::nullopt;
}

StateVector StateVector::basis(std::span<const std::uint8_t> bits) {
  StateVector sv;
  sv.num_qubits_ = bits.size();
  sv.amplitudes_.assign(std::size_t{1} << bits.size(), 0.0);
  std::uint64_t index = 0;
  for (std::size_t q = 0; q < bits.size(); ++q) {
    if (bits[q]) index |= sv.bit_of(static_cast<QubitIndex>(q));
  }
  sv.amplitudes_[index] = 1.0;
  return sv;
}

void StateVector::apply_controlled_2x2(std::uint64_t control_mask,
                                       std::uint64_t target,
                                       const std::complex<double> (&u)[2][2]) {
  const std::uint64_t n = amplitudes_.size();
  for (std::uint64_t i = 0; i < n; ++i) {
    if ((i & target) || (i & control_mask) != control_mask) continue;
    const auto a0 = amplitudes_[i];
    const auto a1 = amplitudes_[i | target];
    amplitudes_[i] = u[0][0] * a0 + u[0][1] * a1;
    amplitudes_[i | target] = u[1][0] * a0 + u[1][1] * a1;
  }
}

void StateVector::apply_gate(GateKind kind, std::span<const QubitIndex> t) {
  std::uint64_t controls = 0;
  for (std::size_t j = 0; j + 1 < t.size(); ++j) controls |= bit_of(t[j]);
  const std::uint64_t target = bit_of(t.back());

  if (is_permutation(kind)) {
    const std::uint64_t n = amplitudes_.size();
    for (std::uint64_t i = 0; i < n; ++i) {
      if ((i & target) || (i & controls) != controls) continue;
      std::swap(amplitudes_[i], amplitudes_[i | target]);
    }
    return;
  }
  static const ComplexMatrix kV = v_matrix().to_complex();
  static const ComplexMatrix kVdg = vdg_matrix().to_complex();
  const auto& m = kind == GateKind::kCV ? kV : kVdg;
  const std::complex<double> u[2][2] = {{m[0], m[1]}, {m[2], m[3]}};
  apply_controlled_2x2(controls, target, u);
}

void StateVector::apply_pauli(QubitIndex qubit, int which) {
  using namespace std::complex_literals;
  static const std::complex<double> kPauli[3][2][2] = {
      {{0.0, 1.0}, {1.0, 0.0}},
      {{0.0, -1i}, {1i, 0.0}},
      {{1.0, 0.0}, {0.0, -1.0}},
  };
  apply_controlled_2x2(0, bit_of(qubit), kPauli[which]);
}

double StateVector::probability_one(QubitIndex qubit) const {
  const std::uint64_t bit = bit_of(qubit);
  double p = 0.0;
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
    if (i & bit) p += std::norm(amplitudes_[i]);
  }
  return p;
}

void StateVector::collapse(QubitIndex qubit, std::uint8_t value) {
  const std::uint64_t bit = bit_of(qubit);
  double kept = 0.0;
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
    if (((i & bit) != 0) != (value != 0)) {
      amplitudes_[i] = 0.0;
    } else {
      kept += std::norm(amplitudes_[i]);
    }
  }
  if (kept <= 0.0) {
    throw Error(ErrorCode::kNormDrift, "collapse onto a zero-probability outcome");
  }
  const double scale = 1.0 / std::sqrt(kept);
  for (auto& a : amplitudes_) a *= scale;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes_) s += std::norm(a);
  return std::sqrt(s);
}

bool is_classical_circuit(const Circuit& circuit) {
  for (const auto& instr : circuit) {
    if (const auto* g = instr.as_gate(); g && !is_permutation(g->kind)) {
      return false;
    }
  }
  return true;
}

Backend select_backend(const Circuit& circuit, Backend requested) {
  if (requested != Backend::kAuto) return requested;
  return is_classical_circuit(circuit) ? Backend::kClassical : Backend::kDense;
}

std::pair<RunResult, StateVector> run_dense_state(
    const Circuit& circuit, std::span<const std::uint8_t> initial_bits,
    std::optional<std::uint64_t> seed, const SimOptions& options,
    const NoiseModel* noise) {
  if (circuit.num_qubits() > options.dense_qubit_cap) {
    throw Error(ErrorCode::kTooManyQubits,
                std::to_string(circuit.num_qubits()) +
                    " qubits exceeds the dense cap of " +
                    std::to_string(options.dense_qubit_cap));
  }
  check_initial_bits(circuit, initial_bits);
  if (noise) noise->validate();
  DenseState state(initial_bits, options);
  Rng rng(seed.value_or(kDefaultSeed));
  RunResult result = execute(circuit, state, rng, noise);
  return {std::move(result), std::move(state.state())};
}

RunResult run_dense(const Circuit& circuit,
                    std::span<const std::uint8_t> initial_bits,
                    std::optional<std::uint64_t> seed,
                    const SimOptions& options, const NoiseModel* noise) {
  return run_dense_state(circuit, initial_bits, seed, options, noise).first;
}

RunResult run_classical(const Circuit& circuit,
                        std::span<const std::uint8_t> initial_bits,
                        std::optional<std::uint64_t> seed,
                        const NoiseModel* noise) {
  if (!is_classical_circuit(circuit)) {
    throw Error(ErrorCode::kNonClassicalGate,
                "classical backend needs a circuit of X, CX and CCX only");
  }
  check_initial_bits(circuit, initial_bits);
  if (noise) noise->validate();
  ClassicalState state(initial_bits);
  Rng rng(seed.value_or(kDefaultSeed));
  return execute(circuit, state, rng, noise);
}

RunResult run(const Circuit& circuit, std::span<const std::uint8_t> initial_bits,
              Backend backend, std::optional<std::uint64_t> seed,
              const SimOptions& options) {
  if (select_backend(circuit, backend) == Backend::kClassical) {
    return run_classical(circuit, initial_bits, seed);
  }
  return run_dense(circuit, initial_bits, seed, options);
}

std::uint64_t derive_shot_seed(std::uint64_t seed, std::uint64_t shot_index) {
  return splitmix64(seed ^ splitmix64(shot_index + 0x632be59bd9b4e019ULL));
}

Histogram sample(const Circuit& circuit,
                 std::span<const std::uint8_t> initial_bits,
                 std::uint64_t shots, const std::optional<NoiseModel>& noise,
                 std::uint64_t seed, Backend backend,
                 const SimOptions& options) {
  if (shots == 0) {
    throw Error(ErrorCode::kInvalidArgument, "shots must be at least 1");
  }
  const NoiseModel* model = noise ? &*noise : nullptr;
  const Backend chosen = select_backend(circuit, backend);
  Histogram hist;
  hist.shots = shots;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const std::uint64_t shot_seed = derive_shot_seed(seed, s);
    const RunResult r =
        chosen == Backend::kClassical
            ? run_classical(circuit, initial_bits, shot_seed, model)
            : run_dense(circuit, initial_bits, shot_seed, options, model);
    ++hist.counts[r.register_value()];
  }
  return hist;
}

}  // namespace qcmp
