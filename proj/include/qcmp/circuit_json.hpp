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

#include <json.hpp>
#include <string>

#include "qcmp/circuit.hpp"

namespace qcmp {

/// {"qubits": N, "clbits": M, "instr": [...], "labels": {...}}. Gates are
/// {"g": "ccx", "t": [0,1,2]} with an optional "if": {"mask": [...], "eq": V};
/// measurements are {"m": [qubit, clbit]}; block markers {"barrier": "begin"}.
nlohmann::ordered_json circuit_to_json(const Circuit& circuit);

/// Throws Error on schema violations and on any IR validation failure.
Circuit circuit_from_json(const nlohmann::json& doc);

std::string dump_circuit_json(const Circuit& circuit, int indent = -1);

}  // namespace qcmp
