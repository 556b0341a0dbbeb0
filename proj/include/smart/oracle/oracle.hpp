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
#include <optional>
#include <span>
#include <vector>

#include "smart/env/channel.hpp"
#include "smart/env/codebook.hpp"
#include "smart/env/config.hpp"

namespace smart {

inline constexpr std::int64_t kBruteForceLimit = std::int64_t{1} << 20;
inline constexpr std::int64_t kGlobalSearchLimit = std::int64_t{1} << 22;

struct NetworkConfiguration {
  std::vector<double> powers_dbm;  // per (cell, UE)
  std::vector<int> beams;          // per (cell, UE)
};

// Network sum-rate sum log2(1 + gamma) of one configuration.
double configuration_sum_rate(const ChannelSet& channels, const NetworkConfiguration& configuration,
                              const NetworkConfig& config, const Codebook& codebook);

struct BruteForceResult {
  std::vector<int> actions;  // joint action per agent
  NetworkConfiguration configuration;
  double sum_rate = 0.0;
  std::int64_t candidates = 0;
};

// Every combination of the agents' joint actions from `current`, pushed
// through the power and beam command rules; returns the first (lexicographic
// in agent order) maximiser of the one-step sum-rate. Agents with a value in
// `fixed_actions` keep that action. Throws SearchTooLarge beyond 2^20
// combinations.
BruteForceResult brute_force_step(const ChannelSet& channels, const NetworkConfiguration& current,
                                  const NetworkConfig& config, const Codebook& codebook,
                                  std::span<const std::optional<int>> fixed_actions = {});

// {P_min, P_min + step, ..., P_max - 10 log10 U} in dBm; the top level is
// always included.
std::vector<double> power_grid(const NetworkConfig& config, double step_db = 3.0);

struct GlobalSearchResult {
  NetworkConfiguration configuration;
  double sum_rate = 0.0;
  std::int64_t candidates = 0;
};

// Exhaustive search over an absolute power level and a beam for every UE of
// every BS with full channel knowledge; configurations over a BS budget are
// skipped. Throws SearchTooLarge beyond 2^22 candidates.
GlobalSearchResult global_csi_search(const ChannelSet& channels, std::span<const double> grid_dbm,
                                     const Codebook& codebook, const NetworkConfig& config);

}  // namespace smart
