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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qcmp/cli.hpp"
#include "qcmp/errors.hpp"

namespace qcmp::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "qcmp");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

TEST(CliTest, ParseNValues) {
  EXPECT_EQ(parse_n_values("1,80"), (std::vector<std::int64_t>{1, 80}));
  EXPECT_EQ(parse_n_values("1:4"), (std::vector<std::int64_t>{1, 2, 3, 4}));
  EXPECT_EQ(parse_n_values("1,10:30:10"), (std::vector<std::int64_t>{1, 10, 20, 30}));
  for (const char* bad : {"", "0", "5:1", "a", "1:2:3:4", "1,,2"}) {
    EXPECT_THROW((void)parse_n_values(bad), Error) << bad;
  }
}

TEST(CliTest, CompareExamples) {
  const Result row17 = run({"compare", "--a", "700", "--b", "420"});
  EXPECT_EQ(row17.code, kExitOk);
  EXPECT_TRUE(has_line(row17.out, "class    Greater")) << row17.out;

  const Result row1 = run({"compare", "--a", "0", "--b", "0"});
  EXPECT_TRUE(has_line(row1.out, "class    Equal"));
  EXPECT_TRUE(has_line(row1.out, "r0       0"));
  EXPECT_TRUE(has_line(row1.out, "r1       0"));

  const Result row6 = run({"compare", "--a", "bin:01", "--b", "bin:11", "--format", "json"});
  EXPECT_NE(row6.out.find("\"class\": \"Less\""), std::string::npos) << row6.out;
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(run({"compare", "--a", "bin:2", "--b", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"compare", "--a", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"compare", "--a", "1", "--b", "0", "--noise-p", "0.1"}).code, kExitUsage);
  EXPECT_EQ(run({"compare", "--a", "1", "--b", "0", "--variant", "nope"}).code, kExitUsage);
  EXPECT_EQ(run({"compare", "--a", "255", "--b", "0", "--backend", "dense",
                 "--dense-cap", "8"}).code,
            kExitBackend);
  EXPECT_EQ(run({"sweep", "--metric", "cost", "--n", "5:1"}).code, kExitUsage);
  EXPECT_EQ(run({"sweep", "--metric", "weight"}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  EXPECT_EQ(run({"verify", "--max-bits", "0"}).code, kExitUsage);
}

TEST(CliTest, Verify) {
  const Result small = run({"verify", "--max-bits", "1"});
  EXPECT_EQ(small.code, kExitOk);
  EXPECT_TRUE(has_line(small.out, "total pairs=4 checks=8 mismatches=0")) << small.out;

  const Result eight = run({"verify", "--max-bits", "8", "--format", "json"});
  EXPECT_EQ(eight.code, kExitOk);
  EXPECT_NE(eight.out.find("\"pairs\": 87380"), std::string::npos);
  EXPECT_NE(eight.out.find("\"mismatches\": 0"), std::string::npos);
}

TEST(CliTest, SweepAndCensusRows) {
  const Result cost = run({"sweep", "--metric", "cost", "--n", "80"});
  EXPECT_EQ(cost.code, kExitOk);
  EXPECT_TRUE(has_line(cost.out, "Proposed,80,Equal,cost,1120"));

  const Result anc = run({"sweep", "--metric", "ancilla", "--n", "1"});
  EXPECT_TRUE(has_line(anc.out, "Xia,1,Equal,ancilla,1"));
  EXPECT_TRUE(has_line(anc.out, "Proposed,1,Equal,ancilla,2"));
  EXPECT_NE(anc.err.find("Oliveira"), std::string::npos) << "deviation note on stderr";

  const Result census = run({"census", "--n", "10"});
  EXPECT_EQ(census.code, kExitOk);
  EXPECT_TRUE(has_line(census.out, "10,45,20,10,20,25,22,24,145,125")) << census.out;
}

TEST(CliTest, ExportAndBuild) {
  const Result qasm = run({"export", "--n", "2"});
  EXPECT_EQ(qasm.code, kExitOk);
  EXPECT_EQ(qasm.out.rfind("OPENQASM 3.0;\n", 0), 0u);
  EXPECT_EQ(run({"export"}).code, kExitUsage);

  const Result built = run({"build", "--a", "5", "--b", "3"});
  EXPECT_EQ(built.code, kExitOk);
  EXPECT_EQ(built.out.front(), '{');
  EXPECT_EQ(run({"build", "--a", "5", "--b", "3", "--emit", "qasm"}).out,
            run({"export", "--a", "5", "--b", "3"}).out);
}

TEST(CliTest, Deterministic) {
  const std::vector<std::vector<std::string>> invocations = {
      {"sweep", "--metric", "delay", "--n", "1:10", "--format", "json"},
      {"census", "--n", "1:20", "--format", "json"},
      {"compare", "--a", "9", "--b", "12", "--shots", "256", "--noise-p", "0.02",
       "--noise-q", "0.01", "--format", "json"},
      {"verify", "--max-bits", "64", "--exhaustive-bits", "4", "--samples", "10",
       "--format", "json"},
  };
  for (const auto& args : invocations) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

TEST(CliTest, OutFileWrittenAtomically) {
  const auto dir = std::filesystem::temp_directory_path() / "qcmp_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "rows.csv";
  std::filesystem::remove(path);
  const Result ok = run({"sweep", "--metric", "cost", "--n", "1", "--out", path.string()});
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_TRUE(ok.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(content.str(), run({"sweep", "--metric", "cost", "--n", "1"}).out);

  const auto bad = dir / "bad.csv";
  std::filesystem::remove(bad);
  EXPECT_EQ(run({"sweep", "--metric", "cost", "--n", "0", "--out", bad.string()}).code,
            kExitUsage);
  EXPECT_FALSE(std::filesystem::exists(bad));
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace qcmp::cli
