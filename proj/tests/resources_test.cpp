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

#include <gtest/gtest.h>

#include "qcmp/comparator.hpp"
#include "qcmp/errors.hpp"
#include "qcmp/resources.hpp"

namespace qcmp {
namespace {

TEST(ResourcesTest, FormulaExamples) {
  const auto th = formula_report(Method::kThapliyal, 80, OperandCase::kEqual);
  EXPECT_EQ(th.cost, 1449);
  EXPECT_EQ(th.ancilla, 317);
  const auto p1 = formula_report(Method::kProposed, 1, OperandCase::kEqual);
  EXPECT_EQ(p1.cost, 14);
  EXPECT_EQ(p1.delay, 4);
  EXPECT_EQ(formula_report(Method::kXia, 10, OperandCase::kEqual).delay, 312);
  EXPECT_EQ(formula_report(Method::kProposed, 10, OperandCase::kUnequal).delay, 45);
  EXPECT_EQ(formula_report(Method::kProposed, 2, OperandCase::kUnequal).delay, 9);
  EXPECT_EQ(formula_report(Method::kVudadha, 1, OperandCase::kEqual).delay, 14);
  EXPECT_EQ(formula_report(Method::kVudadha, 10, OperandCase::kEqual).delay, 19);
}

TEST(ResourcesTest, Monotone) {
  for (auto m : kAllMethods) {
    for (auto oc : {OperandCase::kEqual, OperandCase::kUnequal}) {
      ResourceEstimate prev = formula_report(m, 1, oc);
      for (std::int64_t n = 2; n <= 1000; ++n) {
        const ResourceEstimate cur = formula_report(m, n, oc);
        EXPECT_GE(cur.ancilla, prev.ancilla);
        EXPECT_GE(cur.cost, prev.cost);
        EXPECT_GE(cur.delay, prev.delay);
        prev = cur;
      }
    }
  }
}

TEST(ResourcesTest, MeasuredReport) {
  const MeasuredResources r10 = measured_report(comparator_body(10, BuilderVariant::kFigure));
  EXPECT_EQ(r10.census.count(GateKind::kX), 45u);
  EXPECT_EQ(r10.census.count(GateKind::kCCX), 20u);
  EXPECT_EQ(r10.census.block_count_1bc, 10u);
  EXPECT_EQ(r10.qubits, 22u);
  EXPECT_EQ(r10.width_total, 24u);
  EXPECT_FALSE(r10.executed_cost.has_value());

  const MeasuredResources r1 = measured_report(comparator_body(1, BuilderVariant::kFigure),
                                               encode_operands("0", "0"));
  ASSERT_TRUE(r1.executed_census.has_value());
  EXPECT_EQ(r1.executed_census->count(GateKind::kCCX) * 5, 10u);
  EXPECT_EQ(*r1.executed_cost, r1.static_cost);
}

TEST(ResourcesTest, AncillaAlwaysTwo) {
  for (std::size_t n : {1u, 2u, 7u, 64u, 300u}) {
    EXPECT_EQ(measured_report(comparator_body(n, BuilderVariant::kFigure)).ancilla, 2u);
  }
}

TEST(ResourcesTest, BodyCostMatchesFormula) {
  for (std::int64_t n = 1; n <= 1000; n += (n < 50 ? 1 : 37)) {
    const auto body = comparator_body(static_cast<std::size_t>(n), BuilderVariant::kFigure);
    EXPECT_EQ(measured_report(body).static_cost,
              formula_report(Method::kProposed, n, OperandCase::kUnequal).cost) << n;
  }
}

TEST(ResourcesTest, SweepExamples) {
  const std::vector<std::int64_t> n1000 = {1000};
  const auto anc = sweep(kAllMethods, n1000, Metric::kAncilla, OperandCase::kEqual);
  ASSERT_EQ(anc.size(), 7u);
  EXPECT_EQ(anc[0].value, 2000);  // Wang
  EXPECT_EQ(anc[1].value, 6001);  // AlRabadi
  EXPECT_EQ(anc[6].value, 2);     // Proposed

  const auto cost = sweep(kAllMethods, n1000, Metric::kCost, OperandCase::kEqual);
  EXPECT_EQ(cost[3].value, 14000);
  EXPECT_EQ(cost[4].value, 98913);

  const std::vector<std::int64_t> n1 = {1};
  const auto delay = sweep(kAllMethods, n1, Metric::kDelay, OperandCase::kEqual);
  EXPECT_EQ(delay[1].value, 33);
  EXPECT_EQ(delay[5].value, 33);
}

TEST(ResourcesTest, SweepOrderingAndCsv) {
  const std::vector<Method> methods = {Method::kProposed, Method::kWang};
  const std::vector<std::int64_t> ns = {80, 1, 80};
  const auto rows = sweep(methods, ns, Metric::kCost, OperandCase::kEqual);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(sweep_to_csv(rows),
            "method,n,case,metric,value\n"
            "Wang,1,Equal,cost,1\n"
            "Wang,80,Equal,cost,6400\n"
            "Proposed,1,Equal,cost,14\n"
            "Proposed,80,Equal,cost,1120\n");
  EXPECT_EQ(sweep_to_json(rows), sweep_to_json(rows));
}

TEST(ResourcesTest, GateGrowth) {
  const std::vector<std::int64_t> ns = {1, 2, 100};
  const auto rows = gate_growth(ns);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].x_gates, 4u);
  EXPECT_EQ(rows[0].ccx_gates, 2u);
  EXPECT_EQ(rows[0].blocks_1bc, 1u);
  EXPECT_EQ(rows[0].block_measures, 2u);
  EXPECT_EQ(rows[1].qubits, 6u);
  EXPECT_EQ(rows[1].width, 8u);
  EXPECT_EQ(rows[2].x_gates, 450u);
  EXPECT_EQ(rows[2].ccx_gates, 200u);
  EXPECT_EQ(rows[2].blocks_1bc, 100u);
  EXPECT_EQ(rows[2].block_measures, 200u);
  EXPECT_EQ(growth_to_csv(rows).substr(0, 2), "n,");
}

TEST(ResourcesTest, Names) {
  for (auto m : kAllMethods) EXPECT_EQ(method_from_name(method_name(m)), m);
  try {
    (void)method_from_name("Nobody");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownMethod);
  }
}

TEST(ResourcesTest, KnownDeviationsListed) {
  const auto devs = known_figure_deviations();
  ASSERT_EQ(devs.size(), 2u);
  bool anc = false, delay = false;
  for (const auto& d : devs) {
    EXPECT_EQ(d.method, Method::kOliveira);
    anc |= d.metric == Metric::kAncilla;
    delay |= d.metric == Metric::kDelay && d.n == 2;
  }
  EXPECT_TRUE(anc);
  EXPECT_TRUE(delay);
}

}  // namespace
}  // namespace qcmp
