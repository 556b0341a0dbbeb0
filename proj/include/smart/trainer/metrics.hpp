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
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "smart/env/config.hpp"

namespace smart {

// One agent at one step.
struct StepRecord {
  int episode = 0;
  int step = 0;
  int agent = 0;
  int action = 0;
  double reward = 0.0;  // the reward the agent trained on
  double loss = std::numeric_limits<double>::quiet_NaN();  // NaN: no gradient step
  double epsilon = 0.0;
  std::int64_t shared_tx = 0;
  std::int64_t shared_rx = 0;
  std::vector<double> sinr;  // linear, one per UE of the agent's cell
  double tx_power_mw = 0.0;
  std::vector<int> beams;
};

struct MetricsLog {
  int cells = 0;
  int users_per_cell = 0;
  SumRateMode sum_rate_mode = SumRateMode::kFinalStep;
  std::vector<StepRecord> records;
  // Network sum-rate per episode (bits/s/Hz), per sum_rate_mode.
  std::vector<double> episode_sum_rate;

  int episodes() const { return static_cast<int>(episode_sum_rate.size()); }
};

// Sum over every UE of log2(1 + gamma).
double network_sum_rate(std::span<const double> sinr);

// (1/E) sum_e sum_l sum_u log2(1 + gamma^[e]) using, for every episode, the
// SINRs logged at its final step. Throws ContractViolation on an empty log.
double sum_rate_metric(const MetricsLog& log);

// Final-step SINR of every UE of every episode, in dB.
struct SinrSample {
  int episode = 0;
  int cell = 0;
  int ue = 0;
  double sinr_db = 0.0;
};
std::vector<SinrSample> final_step_sinr_samples(const MetricsLog& log);

// Fraction of samples strictly above each threshold.
std::vector<std::pair<double, double>> ccdf(std::span<const double> samples_db,
                                            std::span<const double> thresholds_db);

// Mean of the last quarter (at least one) of the per-episode sum-rates.
double final_window_sum_rate(std::span<const double> episode_sum_rate);

}  // namespace smart
