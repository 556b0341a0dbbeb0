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
#include <string>

namespace smart {

// Physical scenario. Everything is held in linear units (mW, linear SINR);
// dB/dBm only appear in the configuration file and in reports.
struct NetworkConfig {
  int cells = 2;
  int users_per_cell = 3;
  int antennas = 8;
  int phase_bits = 3;
  double cell_radius_m = 112.0;
  double inter_site_distance_m = 225.0;
  double carrier_freq_hz = 28e9;
  double ue_speed_mps = 2.0 / 3.6;
  double step_duration_s = 1e-3;
  double noise_power_mw = 1e-11;             // -110 dBm
  double max_bs_power_mw = 251.18864315095801;  // 24 dBm, small-cell class
  double min_ue_power_mw = 1.0;              // 0 dBm
  double gamma_min = 0.50118723362727224;    // -3 dB
  double interference_threshold_mw = 1e-11;  // -110 dBm
  double punishment = 100.0;
  double pathloss_exponent = 3.0;
  int paths = 3;
  double angular_spread_rad = 10.0 * 3.14159265358979323846 / 180.0;
  // Users, paths and fading are drawn once per run and never change.
  bool static_channels = false;

  // Throws ConfigError describing the first violated invariant.
  void validate() const;

  int codebook_size() const { return 1 << phase_bits; }
  int joint_actions() const { return 1 << (2 * users_per_cell); }
  int state_size() const { return 4 * users_per_cell; }
  int total_users() const { return cells * users_per_cell; }

  double max_bs_power_dbm() const;
  double min_ue_power_dbm() const;
  // Power every UE starts an episode with: P_max - 10 log10(U) - 3 dB.
  double initial_ue_power_dbm() const;
};

enum class Framework { kSmart, kShareAll, kShareNothing, kCrdu, kCtde };
enum class Attribution { kMeasured, kGenie };
enum class SumRateMode { kFinalStep, kStepMean };

std::string to_string(Framework framework);
std::string to_string(Attribution attribution);
std::string to_string(SumRateMode mode);
// Throw ConfigError on unknown names.
Framework parse_framework(const std::string& name);
Attribution parse_attribution(const std::string& name);
SumRateMode parse_sum_rate_mode(const std::string& name);

struct TrainingConfig {
  int episodes = 200;
  int steps_per_episode = 50;
  int batch_size = 32;
  double learning_rate = 0.01;
  double discount = 0.995;
  int buffer_capacity = 10000;
  int target_period = 1;
  double epsilon_start = 1.0;
  double epsilon_decay = 0.99;
  double epsilon_min = 0.05;
  int hidden1 = 56;
  int hidden2 = 56;
  // Positive factor applied to rewards inside the TD target only.
  double reward_scale = 0.01;
  // Global L2 norm bound on the gradient before the update; 0 disables.
  double grad_clip_norm = 10.0;
  int ctde_period = 1;
  Attribution attribution = Attribution::kMeasured;
  SumRateMode sum_rate_mode = SumRateMode::kFinalStep;
  int eval_episodes = 20;

  void validate() const;
};

struct RunConfig {
  NetworkConfig network;
  TrainingConfig training;
  Framework framework = Framework::kSmart;
  std::uint64_t seed = 1;

  void validate() const {
    network.validate();
    training.validate();
  }
};

}  // namespace smart
