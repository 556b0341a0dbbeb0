// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace smart {

// Decimal, 12 significant digits; non-finite values print as nan/inf/-inf.
std::string format_number(double value);
std::string format_number(std::int64_t value);
inline std::string format_number(int value) { return format_number(static_cast<std::int64_t>(value)); }

// Plain comma-separated table: no quoting, one header row, '\n' line ends.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const;  // throws IoError if absent
  double number(std::size_t row, std::size_t column) const;
  friend bool operator==(const CsvTable&, const CsvTable&) = default;
};

std::string serialize_csv(const CsvTable& table);
// `source` names the input in error messages, which also carry the 1-based
// line number of the offending row.
CsvTable parse_csv(const std::string& text, const std::string& source = "<csv>");

CsvTable read_csv(const std::filesystem::path& path);
void write_csv(const std::filesystem::path& path, const CsvTable& table);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace smart
