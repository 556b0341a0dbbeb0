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
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "smart/env/config.hpp"

namespace smart {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 1,
  kExitRuntime = 2,
  kExitIo = 3,
};

// Environment variable that overrides the configured master seed. An
// explicit --seed flag wins over it.
inline constexpr const char* kSeedVariable = "SMART_SEED";

struct ResolvedConfig {
  RunConfig config;
  std::string seed_source;  // "config", "env:SMART_SEED" or "flag"
};

// Loads `path` (defaults when empty), then applies the framework and seed
// overrides. Throws ConfigError / IoError.
ResolvedConfig resolve_config(const std::optional<std::filesystem::path>& path,
                              const std::optional<std::string>& framework,
                              const std::optional<std::uint64_t>& seed);

struct TrainArgs {
  std::optional<std::filesystem::path> config;
  std::optional<std::string> framework;
  std::optional<std::uint64_t> seed;
  std::filesystem::path out;
  bool single_thread = false;
  bool print_config = false;
};

struct CompareArgs {
  std::optional<std::filesystem::path> config;
  std::vector<std::string> frameworks;
  int seeds = 1;
  std::filesystem::path out;
  bool single_thread = false;
};

struct CcdfArgs {
  std::filesystem::path in;
  std::filesystem::path out;
};

struct OracleArgs {
  std::optional<std::filesystem::path> config;
  std::optional<std::uint64_t> seed;
  std::filesystem::path out;
  std::string search = "step";  // step | global
  double grid_step_db = 3.0;
};

// Each command reports progress on `out`, problems on `err`, and returns an
// ExitCode.
int cmd_train(const TrainArgs& args, std::ostream& out, std::ostream& err);
int cmd_compare(const CompareArgs& args, std::ostream& out, std::ostream& err);
int cmd_ccdf(const CcdfArgs& args, std::ostream& out, std::ostream& err);
int cmd_oracle(const OracleArgs& args, std::ostream& out, std::ostream& err);

}  // namespace smart
