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


#include "smart/env/config.hpp"

#include <cmath>

#include "smart/common/errors.hpp"
#include "smart/common/units.hpp"

namespace smart {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

}  // namespace

void NetworkConfig::validate() const {
  require(cells >= 1, "cells must be >= 1");
  require(users_per_cell >= 1, "users_per_cell must be >= 1");
  require(users_per_cell <= 10, "users_per_cell must be <= 10 (joint action space is 4^U)");
  require(antennas >= 1, "antennas must be >= 1");
  require(phase_bits >= 1 && phase_bits <= 8, "phase_bits must be in [1, 8]");
  require(cell_radius_m > 0.0, "cell_radius_m must be > 0");
  require(inter_site_distance_m >= cell_radius_m, "inter_site_distance_m must be >= cell_radius_m");
  require(carrier_freq_hz > 0.0, "carrier_freq_hz must be > 0");
  require(ue_speed_mps >= 0.0, "ue speed must be >= 0");
  require(step_duration_s > 0.0, "step_duration_s must be > 0");
  require(noise_power_mw > 0.0 && std::isfinite(noise_power_mw), "noise power must be > 0");
  require(max_bs_power_mw > 0.0 && std::isfinite(max_bs_power_mw), "max BS power must be > 0");
  require(min_ue_power_mw > 0.0, "min UE power must be > 0");
  require(min_ue_power_mw * users_per_cell <= max_bs_power_mw,
          "users_per_cell x min UE power exceeds the BS power budget");
  require(initial_ue_power_dbm() >= min_ue_power_dbm(),
          "initial UE power (P_max - 10log10 U - 3 dB) is below the UE power floor");
  require(gamma_min > 0.0, "gamma_min must be > 0");
  require(interference_threshold_mw > 0.0, "interference threshold must be > 0");
  require(punishment > 0.0, "punishment must be > 0");
  require(pathloss_exponent > 0.0, "pathloss_exponent must be > 0");
  require(paths >= 1, "paths must be >= 1");
  require(angular_spread_rad >= 0.0, "angular spread must be >= 0");
}

double NetworkConfig::max_bs_power_dbm() const { return mw_to_dbm(max_bs_power_mw); }
double NetworkConfig::min_ue_power_dbm() const { return mw_to_dbm(min_ue_power_mw); }

double NetworkConfig::initial_ue_power_dbm() const {
  return max_bs_power_dbm() - 10.0 * std::log10(static_cast<double>(users_per_cell)) - 3.0;
}

void TrainingConfig::validate() const {
  require(episodes >= 1, "episodes must be >= 1");
  require(steps_per_episode >= 1, "steps_per_episode must be >= 1");
  require(batch_size >= 1, "batch_size must be >= 1");
  require(learning_rate >= 0.0, "learning_rate must be >= 0");
  require(discount >= 0.0 && discount <= 1.0, "discount must be in [0, 1]");
  require(buffer_capacity >= batch_size, "buffer_capacity must be >= batch_size");
  require(target_period >= 1, "target_period must be >= 1");
  require(epsilon_start >= 0.0 && epsilon_start <= 1.0, "epsilon_start must be in [0, 1]");
  require(epsilon_decay > 0.0 && epsilon_decay <= 1.0, "epsilon_decay must be in (0, 1]");
  require(epsilon_min >= 0.0 && epsilon_min <= 1.0, "epsilon_min must be in [0, 1]");
  require(hidden1 >= 1 && hidden2 >= 1, "hidden layer sizes must be >= 1");
  require(reward_scale > 0.0, "reward_scale must be > 0");
  require(grad_clip_norm >= 0.0, "grad_clip_norm must be >= 0");
  require(ctde_period >= 1, "ctde_period must be >= 1");
  require(eval_episodes >= 0, "eval_episodes must be >= 0");
}

std::string to_string(Framework framework) {
  switch (framework) {
    case Framework::kSmart: return "smart";
    case Framework::kShareAll: return "share-all";
    case Framework::kShareNothing: return "share-nothing";
    case Framework::kCrdu: return "crdu";
    case Framework::kCtde: return "ctde";
  }
  return "unknown";
}

std::string to_string(Attribution attribution) {
  return attribution == Attribution::kMeasured ? "measured" : "genie";
}

std::string to_string(SumRateMode mode) {
  return mode == SumRateMode::kFinalStep ? "final" : "mean";
}

Framework parse_framework(const std::string& name) {
  for (auto f : {Framework::kSmart, Framework::kShareAll, Framework::kShareNothing,
                 Framework::kCrdu, Framework::kCtde}) {
    if (to_string(f) == name) return f;
  }
  throw ConfigError("unknown framework '" + name +
                    "' (expected smart | share-all | share-nothing | crdu | ctde)");
}

Attribution parse_attribution(const std::string& name) {
  if (name == "measured") return Attribution::kMeasured;
  if (name == "genie") return Attribution::kGenie;
  throw ConfigError("unknown attribution mode '" + name + "' (expected measured | genie)");
}

SumRateMode parse_sum_rate_mode(const std::string& name) {
  if (name == "final") return SumRateMode::kFinalStep;
  if (name == "mean") return SumRateMode::kStepMean;
  throw ConfigError("unknown sum-rate mode '" + name + "' (expected final | mean)");
}

}  // namespace smart
