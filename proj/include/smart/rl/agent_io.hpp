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
#include <span>
#include <vector>

#include "smart/env/config.hpp"
#include "smart/env/geometry.hpp"

namespace smart {

// Local observation of one agent: for every UE, [power, beam, x, y] with
//   power = (P_dBm - P_min_dBm) / (P_max_dBm - P_min_dBm)
//   beam  = index / (2^r - 1)
//   x, y  = offset from the serving BS / cell_radius.
using StateVector = std::vector<double>;

StateVector encode_state(std::span<const double> prev_powers_dbm, std::span<const int> prev_beams,
                         std::span<const Point> user_offsets, const NetworkConfig& config);

// Inverse of the power slot normalisation.
double decode_power_slot(double value, const NetworkConfig& config);

struct UeCommand {
  bool power_up = false;
  bool beam_up = false;
  friend bool operator==(const UeCommand&, const UeCommand&) = default;
};

// Joint action of one agent. Bit 2u is UE u's power command and bit 2u + 1
// its beam command; 0 means decrease, 1 increase.
struct JointAction {
  int index = 0;
  std::vector<UeCommand> commands;
};

std::vector<UeCommand> decode_action(int index, int users_per_cell);
int encode_action(std::span<const UeCommand> commands);

// +/-1 dB per UE. If the resulting cell total exceeds the BS budget, every
// command of the step becomes -1 dB. Powers never drop below the UE floor.
std::vector<double> apply_power_command(std::span<const double> prev_powers_dbm,
                                        std::span<const UeCommand> commands,
                                        double max_bs_power_mw, double min_ue_power_dbm);

// Saturating +/-1 step along the codebook.
int apply_beam_command(int prev_index, bool step_up, int codebook_size);

// Product of (1 + gamma_u) when every UE clears gamma_min and sees inter-cell
// power below the threshold, otherwise -punishment.
double cell_reward(std::span<const double> sinr, std::span<const double> inter_mw,
                   double gamma_min, double interference_threshold_mw, double punishment);

// One UE's row of an agent's stored transitions. The state vectors are the
// agent's full observation; (cell, ue, step) identifies the row.
struct Experience {
  StateVector state;
  int action = 0;
  UeCommand command;
  double reward = 0.0;
  StateVector next_state;
  int cell = 0;
  int ue = 0;
  std::int64_t step = 0;

  friend bool operator==(const Experience&, const Experience&) = default;
};

// Scalars one experience costs on the air: state, next state, two command
// bits and the reward. Tags are not counted.
inline std::int64_t experience_scalars(int users_per_cell) {
  return 2 * (4 * static_cast<std::int64_t>(users_per_cell)) + 2 + 1;
}

}  // namespace smart
