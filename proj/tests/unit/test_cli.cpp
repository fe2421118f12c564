// Copyright 2026 The ngtmst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "app.hpp"
#include "table.hpp"

namespace ngtmst::cli {
namespace {

namespace fs = std::filesystem;

struct Invocation {
  int code = 0;
  std::string out;
  std::string err;
};

Invocation invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  Invocation r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

fs::path temp_path(const std::string& name) {
  return fs::temp_directory_path() / ("ngtmst_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                      "_" + name);
}

TEST(TableFormat, TenSignificantDigits) {
  EXPECT_EQ(format_cell(0.1234567890123), "0.123456789");
  EXPECT_EQ(format_cell(1234567.891234), "1234567.891");
  EXPECT_EQ(format_cell(8.2123456789e-4), "0.0008212345679");
  EXPECT_EQ(format_cell(std::int64_t{42}), "42");
  EXPECT_EQ(format_cell(true), "1");
  EXPECT_EQ(format_cell(std::string("sym-1ps")), "sym-1ps");
  EXPECT_EQ(format_cell(std::numeric_limits<double>::quiet_NaN()), "nan");
}

TEST(TableFormat, RowWidthIsChecked) {
  Table t({"a", "b"});
  EXPECT_THROW(t.add_row({1.0}), std::invalid_argument);
}

TEST(TableFormat, CsvHasHeader) {
  Table t({"spec", "F"});
  t.add_row({std::string("sym-1ps"), 0.5});
  std::ostringstream os;
  write_csv(os, t);
  EXPECT_EQ(os.str(), "spec,F\nsym-1ps,0.5\n");
}

TEST(TableFormat, JsonMirrorsRowsAndWritesNull) {
  Table t({"spec", "F"});
  t.add_row({std::string("x"), std::numeric_limits<double>::quiet_NaN()});
  t.add_row({std::string("y"), 0.25});
  std::ostringstream os;
  write_json(os, t, {{"tool", "ngtmst"}});
  const auto doc = nlohmann::json::parse(os.str());
  EXPECT_EQ(doc["metadata"]["tool"], "ngtmst");
  EXPECT_EQ(doc["columns"], nlohmann::json({"spec", "F"}));
  ASSERT_EQ(doc["rows"].size(), 2u);
  EXPECT_TRUE(doc["rows"][0]["F"].is_null());
  EXPECT_EQ(doc["rows"][1]["F"], 0.25);
  EXPECT_EQ(doc["rows"][1]["spec"], "y");
}

TEST(Cli, FidScanCsv) {
  const Invocation r = invoke({"fid-scan", "--specs", "sym-1ps,sym-1pc", "--kappa", "0.51", "--grid-r", "0.2:0.4:0.2",
                               "--grid-t", "0.1:1:0.1", "--workers", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 5u);
  EXPECT_EQ(l[0], "spec,kappa,r,T_opt,F,F_base,dF,P,R,r_th");
  EXPECT_EQ(l[1].rfind("sym-1ps,0.51,0.2,", 0), 0u) << l[1];
}

TEST(Cli, GlobalFlagsBeforeOrAfterSubcommand) {
  const Invocation a = invoke({"--format", "json", "heatmap", "--spec", "sym-1pc", "--kappa", "0.75", "--grid-r",
                               "0.3:0.6:0.3", "--grid-t", "0.5:1:0.5"});
  const Invocation b = invoke({"heatmap", "--spec", "sym-1pc", "--kappa", "0.75", "--grid-r", "0.3:0.6:0.3",
                               "--grid-t", "0.5:1:0.5", "--format", "json"});
  ASSERT_EQ(a.code, 0) << a.err;
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(a.out, b.out);
  const auto doc = nlohmann::json::parse(a.out);
  EXPECT_EQ(doc["metadata"]["tool"], "ngtmst");
  EXPECT_TRUE(doc["metadata"].contains("version"));
  EXPECT_EQ(doc["metadata"]["command"], "heatmap");
  EXPECT_EQ(doc["metadata"]["config"]["spec"], "sym-1pc");
  EXPECT_EQ(doc["rows"].size(), 4u);
  EXPECT_EQ(doc["columns"].back(), "black");
}

TEST(Cli, KappaScanWithExplicitSqueezing) {
  const Invocation r = invoke({"kappa-scan", "--specs", "sym-1ps", "--r", "0.5", "--grid-kappa", "0.5:1:0.25",
                               "--grid-t", "0.1:1:0.1", "--input", "sqvac", "--eps", "0.3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 4u);
  EXPECT_EQ(l[0], "spec,kappa,r,T_opt,F,F_base,dF,P,R");
}

TEST(Cli, SqueezedInputNeedsKnownName) {
  const Invocation r = invoke({"fid-scan", "--input", "cat"});
  EXPECT_NE(r.code, 0);
}

TEST(Cli, BadFormatFlagIsRejected) {
  EXPECT_NE(invoke({"--format", "xml", "table1"}).code, 0);
}

TEST(Cli, MissingSubcommandIsRejected) {
  EXPECT_NE(invoke({"--workers", "2"}).code, 0);
}

TEST(Cli, MalformedGridIsReported) {
  const Invocation r = invoke({"heatmap", "--grid-r", "0:1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("A:B:STEP"), std::string::npos) << r.err;
}

TEST(Cli, ConfigFileWithFlagOverride) {
  const fs::path cfg = temp_path("config.json");
  {
    std::ofstream(cfg) << R"({"format": "json", "kappa": 0.75, "grid_r": "0.3:0.3:0.1", "grid_t": "0.5:1:0.5",
                            "spec": "sym-1ps"})";
  }
  const Invocation r = invoke({"heatmap", "--config", cfg.string(), "--kappa", "1.0"});
  fs::remove(cfg);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["metadata"]["config"]["kappa"], 1.0);
  EXPECT_EQ(doc["metadata"]["config"]["spec"], "sym-1ps");
  EXPECT_EQ(doc["rows"].size(), 2u);
  EXPECT_EQ(doc["rows"][0]["kappa"], 1.0);
}

TEST(Cli, ConfigRejectsUnknownKeys) {
  const fs::path cfg = temp_path("bad.json");
  { std::ofstream(cfg) << R"({"kapa": 0.7})"; }
  const Invocation r = invoke({"heatmap", "--config", cfg.string()});
  fs::remove(cfg);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("kapa"), std::string::npos);
}

TEST(Cli, ConfigRejectsBadFormatValue) {
  const fs::path cfg = temp_path("fmt.json");
  { std::ofstream(cfg) << R"({"format": "xml", "grid_r": "0.3:0.3:0.1", "grid_t": "0.5:1:0.5"})"; }
  const Invocation r = invoke({"heatmap", "--config", cfg.string()});
  fs::remove(cfg);
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, ApplyConfigSkipsGivenKeys) {
  Settings s;
  s.kappa = 0.9;
  apply_config(nlohmann::json{{"kappa", 0.6}, {"workers", 3}}, {"kappa"}, s);
  EXPECT_EQ(s.kappa, 0.9);
  EXPECT_EQ(s.workers, 3);
  EXPECT_THROW(apply_config(nlohmann::json{{"workers", "three"}}, {}, s), std::invalid_argument);
}

TEST(Cli, WritesOutputFile) {
  const fs::path out = temp_path("out.csv");
  const Invocation r = invoke({"--out", out.string(), "heatmap", "--grid-r", "0.5:0.5:0.1", "--grid-t", "1:1:1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "spec,kappa,r,T,F,F_base,dF,P,R,gray,black");
  fs::remove(out);
}

TEST(Cli, OutputIsDeterministicAcrossWorkerCounts) {
  const std::vector<std::string> base{"fid-scan", "--specs", "sym-1pc,asym-1ps", "--grid-r", "0.1:0.5:0.2",
                                      "--grid-t", "0.05:1:0.05"};
  auto with_workers = [&](const char* w) {
    std::vector<std::string> args = base;
    args.insert(args.end(), {"--workers", w});
    return invoke(args);
  };
  const Invocation one = with_workers("1");
  const Invocation many = with_workers("6");
  ASSERT_EQ(one.code, 0) << one.err;
  EXPECT_EQ(one.out, many.out);
}

}  // namespace
}  // namespace ngtmst::cli
