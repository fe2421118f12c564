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

#ifndef NGTMST_TOOLS_APP_HPP
#define NGTMST_TOOLS_APP_HPP

#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "table.hpp"

namespace ngtmst::cli {

/// Effective configuration of one CLI invocation. Grids are kept as
/// "A:B:STEP" text and parsed when the command runs.
struct Settings {
  std::string command;
  std::string out;  // empty: standard output
  std::string format = "csv";
  int workers = 1;
  std::string grid_r = "0:1.5:0.01";
  std::string grid_t = "0.01:1:0.01";
  std::string grid_kappa = "0.5:1.5:0.005";
  std::string input = "coherent";
  double eps = 1.7;
  double kappa = std::numeric_limits<double>::quiet_NaN();  // NaN: command default
  std::vector<std::string> specs;                           // empty: command default
  std::string spec = "sym-1ps";
  std::string r = "auto";
  std::string objective = "F";
  bool oracle = false;
  int cutoff = 25;
  double t_tolerance = 1e-5;
  double r_tolerance = 1e-5;
};

/// Overwrites every field named in `config` except those listed in `given`.
/// Throws std::invalid_argument for unknown keys or mistyped values.
void apply_config(const nlohmann::json& config, const std::vector<std::string>& given, Settings& settings);

nlohmann::ordered_json describe(const Settings& settings);

struct CommandResult {
  Table table;
  nlohmann::ordered_json metadata;  // command-specific extras, merged into the JSON metadata block
};

/// Runs the selected command.
CommandResult run_command(const Settings& settings);

/// Full CLI entry point; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ngtmst::cli

#endif  // NGTMST_TOOLS_APP_HPP
