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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcmp/circuit.hpp"
#include "qcmp/comparator.hpp"

namespace qcmp {

/// Comparator designs with published closed-form resource models, in table
/// order. The enum order is the stable output order.
enum class Method { kWang, kAlRabadi, kThapliyal, kVudadha, kOliveira, kXia, kProposed };

inline constexpr std::array<Method, 7> kAllMethods = {
    Method::kWang,     Method::kAlRabadi, Method::kThapliyal, Method::kVudadha,
    Method::kOliveira, Method::kXia,      Method::kProposed};

std::string_view method_name(Method method);
/// Throws kUnknownMethod.
Method method_from_name(std::string_view name);

/// Only the proposed design distinguishes equal from unequal operands.
enum class OperandCase { kEqual, kUnequal };

std::string_view case_name(OperandCase c);
std::optional<OperandCase> case_from_name(std::string_view name);

enum class Metric { kAncilla, kCost, kDelay };

std::string_view metric_name(Metric m);
std::optional<Metric> metric_from_name(std::string_view name);

struct ResourceEstimate {
  Method method = Method::kProposed;
  std::int64_t n = 0;
  OperandCase operand_case = OperandCase::kEqual;
  std::int64_t ancilla = 0;
  std::int64_t cost = 0;
  std::int64_t delay = 0;

  std::int64_t value(Metric m) const;
};

/// Evaluates the closed-form ancilla, cost and delay models at width n >= 1.
/// Logarithmic delays use log10 rounded half up; the proposed design's
/// half-integer unequal-case terms are rounded up.
ResourceEstimate formula_report(Method method, std::int64_t n,
                                OperandCase operand_case);

struct MeasuredResources {
  GateCensus census;
  std::int64_t static_cost = 0;
  /// Present only when operands were supplied.
  std::optional<std::int64_t> executed_cost;
  std::optional<GateCensus> executed_census;
  std::int64_t structural_delay = 0;
  std::size_t qubits = 0;
  std::size_t width_total = 0;
  /// Qubits not labelled as operand bits (a_*, b_*).
  std::size_t ancilla = 0;
};

/// Census and costs of a built comparator. With operands, `circuit` must be
/// a comparator body; the operands are loaded as its initial basis state and
/// the classical backend counts the instructions that fire.
MeasuredResources measured_report(const Circuit& circuit,
                                  const std::optional<Operands>& inputs = std::nullopt);

struct SweepRow {
  Method method = Method::kProposed;
  std::int64_t n = 0;
  OperandCase operand_case = OperandCase::kEqual;
  Metric metric = Metric::kCost;
  std::int64_t value = 0;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// Rows ordered by method, then ascending n.
std::vector<SweepRow> sweep(std::span<const Method> methods,
                            std::span<const std::int64_t> n_values,
                            Metric metric, OperandCase operand_case);

std::string sweep_to_csv(std::span<const SweepRow> rows);
std::string sweep_to_json(std::span<const SweepRow> rows);

struct GrowthRow {
  std::size_t n = 0;
  std::size_t x_gates = 0;
  std::size_t ccx_gates = 0;
  std::size_t blocks_1bc = 0;
  std::size_t block_measures = 0;
  std::size_t total_measures = 0;
  std::size_t qubits = 0;
  std::size_t width = 0;
  std::int64_t body_cost = 0;
  std::int64_t structural_delay = 0;

  friend bool operator==(const GrowthRow&, const GrowthRow&) = default;
};

/// Builds the comparator body for each n and reports its gate census.
std::vector<GrowthRow> gate_growth(std::span<const std::int64_t> n_values,
                                   BuilderVariant variant = BuilderVariant::kFigure);

std::string growth_to_csv(std::span<const GrowthRow> rows);
std::string growth_to_json(std::span<const GrowthRow> rows);

/// Published plot points that disagree with the closed-form model.
struct FigureDeviation {
  Method method;
  Metric metric;
  /// n == 0 means the whole series.
  std::int64_t n;
  std::string note;
};

std::vector<FigureDeviation> known_figure_deviations();

}  // namespace qcmp
