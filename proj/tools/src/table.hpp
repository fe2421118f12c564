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

#ifndef NGTMST_TOOLS_TABLE_HPP
#define NGTMST_TOOLS_TABLE_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace ngtmst::cli {

using Cell = std::variant<double, std::int64_t, bool, std::string>;

/// Rectangular result table with named columns.
class Table {
 public:
  explicit Table(std::vector<std::string> columns);

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }

  /// Throws std::invalid_argument when the row width differs from the header.
  void add_row(std::vector<Cell> row);

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

/// Floats with 10 significant digits; NaN prints as "nan", booleans as 0/1.
std::string format_cell(const Cell& cell);

void write_csv(std::ostream& out, const Table& table);

/// {"metadata": ..., "columns": [...], "rows": [{column: value}, ...]};
/// non-finite floats become null.
void write_json(std::ostream& out, const Table& table, const nlohmann::ordered_json& metadata);

}  // namespace ngtmst::cli

#endif  // NGTMST_TOOLS_TABLE_HPP
