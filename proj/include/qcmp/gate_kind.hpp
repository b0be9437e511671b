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

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace qcmp {

/// Gate identities understood by the IR. Targets are listed controls first,
/// target last (CX: control, target; CCX: control, control, target).
enum class GateKind { kX, kCX, kCCX, kCV, kCVDG };

inline constexpr std::array<GateKind, 5> kAllGateKinds = {
    GateKind::kX, GateKind::kCX, GateKind::kCCX, GateKind::kCV,
    GateKind::kCVDG};

inline constexpr std::size_t kNumGateKinds = kAllGateKinds.size();

constexpr std::size_t index_of(GateKind kind) {
  return static_cast<std::size_t>(kind);
}

constexpr std::size_t arity(GateKind kind) {
  switch (kind) {
    case GateKind::kX: return 1;
    case GateKind::kCX: return 2;
    case GateKind::kCCX: return 3;
    case GateKind::kCV: return 2;
    case GateKind::kCVDG: return 2;
  }
  return 0;
}

/// Permutation gates map computational basis states to basis states.
constexpr bool is_permutation(GateKind kind) {
  return kind == GateKind::kX || kind == GateKind::kCX ||
         kind == GateKind::kCCX;
}

/// Lower-case mnemonic used by the JSON and QASM formats.
std::string_view mnemonic(GateKind kind);
std::optional<GateKind> gate_kind_from_mnemonic(std::string_view name);

}  // namespace qcmp
