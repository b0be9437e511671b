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

#include "qcmp/circuit_json.hpp"

#include "qcmp/errors.hpp"

namespace qcmp {

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, "circuit json: " + what);
}

}  // namespace

nlohmann::ordered_json circuit_to_json(const Circuit& circuit) {
  nlohmann::ordered_json doc;
  doc["qubits"] = circuit.num_qubits();
  doc["clbits"] = circuit.num_clbits();
  auto instrs = nlohmann::ordered_json::array();
  for (const auto& instr : circuit) {
    nlohmann::ordered_json j;
    if (const auto* g = instr.as_gate()) {
      j["g"] = std::string(mnemonic(g->kind));
      j["t"] = g->targets;
    } else if (const auto* m = instr.as_measure()) {
      j["m"] = {m->qubit, m->clbit};
    } else if (const auto* b = instr.as_barrier()) {
      j["barrier"] = b->marker == BlockMarker::kBegin ? "begin" : "end";
    }
    if (instr.condition) {
      j["if"] = {{"mask", instr.condition->clbits},
                 {"eq", instr.condition->value}};
    }
    instrs.push_back(std::move(j));
  }
  doc["instr"] = std::move(instrs);
  if (!circuit.labels().empty()) {
    nlohmann::ordered_json labels;
    for (const auto& [q, name] : circuit.labels()) {
      labels[std::to_string(q)] = name;
    }
    doc["labels"] = std::move(labels);
  }
  return doc;
}

Circuit circuit_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) schema_error("document must be an object");
  try {
    Circuit circuit(doc.at("qubits").get<std::size_t>(),
                    doc.at("clbits").get<std::size_t>());
    for (const auto& j : doc.at("instr")) {
      std::optional<ClassicalCondition> cond;
      if (j.contains("if")) {
        const auto& c = j.at("if");
        cond = ClassicalCondition{c.at("mask").get<std::vector<ClbitIndex>>(),
                                  c.at("eq").get<std::uint64_t>()};
      }
      if (j.contains("g")) {
        const auto name = j.at("g").get<std::string>();
        const auto kind = gate_kind_from_mnemonic(name);
        if (!kind) schema_error("unknown gate '" + name + "'");
        circuit.append(Instruction::gate(
            *kind, j.at("t").get<std::vector<QubitIndex>>(), std::move(cond)));
      } else if (j.contains("m")) {
        const auto pair = j.at("m").get<std::vector<std::uint32_t>>();
        if (pair.size() != 2) schema_error("measure needs [qubit, clbit]");
        Instruction instr = Instruction::measure(pair[0], pair[1]);
        instr.condition = std::move(cond);
        circuit.append(std::move(instr));
      } else if (j.contains("barrier")) {
        const auto tag = j.at("barrier").get<std::string>();
        if (tag != "begin" && tag != "end") schema_error("bad barrier tag");
        circuit.append(Instruction::barrier(
            tag == "begin" ? BlockMarker::kBegin : BlockMarker::kEnd));
      } else {
        schema_error("unrecognised instruction " + j.dump());
      }
    }
    if (doc.contains("labels")) {
      for (const auto& [key, value] : doc.at("labels").items()) {
        circuit.set_label(static_cast<QubitIndex>(std::stoul(key)),
                          value.get<std::string>());
      }
    }
    return circuit;
  } catch (const nlohmann::json::exception& e) {
    schema_error(e.what());
  }
}

std::string dump_circuit_json(const Circuit& circuit, int indent) {
  return circuit_to_json(circuit).dump(indent);
}

}  // namespace qcmp
