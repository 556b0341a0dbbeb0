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

#include <filesystem>
#include <string>
#include <vector>

#include "smart/env/config.hpp"

namespace smart {

// Configuration files are flat `key = value` lines grouped under [network],
// [training] and [run] sections. '#' starts a comment. Physical quantities
// are written in dB, dBm, meters, Hz, km/h and degrees; missing keys keep
// their defaults.
RunConfig parse_config(const std::string& text);
// IoError when the file cannot be read; ConfigError (with line) otherwise.
RunConfig load_config(const std::filesystem::path& path);

struct ConfigEntry {
  std::string section;
  std::string key;
  std::string value;  // file units, 12 significant digits
};

// Every resolved value, in file order.
std::vector<ConfigEntry> config_entries(const RunConfig& config);
// A complete configuration file that parses back to `config`.
std::string serialize_config(const RunConfig& config);

}  // namespace smart
