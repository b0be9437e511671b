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

#include <string>
#include <string_view>

#include "qcmp/circuit.hpp"

namespace qcmp {

/// Writes the OpenQASM-3-style subset:
///
///   OPENQASM 3.0;
///   qubit[N] q;
///   bit[M] cr;
///   x q[i]; | cx q[i], q[j]; | ccx q[i], q[j], q[k];
///   cv q[i], q[j]; | cvdg q[i], q[j];      (nonstandard names for CV / CV†)
///   cr[k] = measure q[i];
///   if (cr == V) { ... }  |  if (cr[k] == V) { ... }
///   pragma block begin  |  pragma block end
///
/// Consecutive gates sharing a condition share one if-block. Qubit labels are
/// written as comments. Throws kUnsupportedInstruction for conditions that
/// are neither the whole register nor a single bit.
std::string export_qasm(const Circuit& circuit);

/// Parses the subset written by export_qasm. Throws SyntaxError with the
/// 1-based line and column, kUndeclaredRegister, kIndexOutOfRange or
/// kValueTooLarge.
Circuit parse_qasm(std::string_view text);

}  // namespace qcmp
