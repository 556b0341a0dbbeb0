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


#include "smart/rl/agent_io.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "smart/common/errors.hpp"
#include "smart/common/units.hpp"

namespace smart {

StateVector encode_state(std::span<const double> prev_powers_dbm, std::span<const int> prev_beams,
                         std::span<const Point> user_offsets, const NetworkConfig& config) {
  const auto U = static_cast<std::size_t>(config.users_per_cell);
  if (prev_powers_dbm.size() != U || prev_beams.size() != U || user_offsets.size() != U) {
    throw ContractViolation("encode_state expects one power, beam and position per UE");
  }
  const double p_lo = config.min_ue_power_dbm();
  const double p_span = config.max_bs_power_dbm() - p_lo;
  const double beam_span = config.codebook_size() - 1;

  StateVector state;
  state.reserve(4 * U);
  for (std::size_t u = 0; u < U; ++u) {
    state.push_back((prev_powers_dbm[u] - p_lo) / p_span);
    state.push_back(prev_beams[u] / beam_span);
    state.push_back(user_offsets[u].x / config.cell_radius_m);
    state.push_back(user_offsets[u].y / config.cell_radius_m);
  }
  return state;
}

double decode_power_slot(double value, const NetworkConfig& config) {
  const double p_lo = config.min_ue_power_dbm();
  return p_lo + value * (config.max_bs_power_dbm() - p_lo);
}

std::vector<UeCommand> decode_action(int index, int users_per_cell) {
  if (users_per_cell < 0 || users_per_cell > 15) {
    throw ContractViolation("users_per_cell out of supported range");
  }
  const int limit = 1 << (2 * users_per_cell);
  if (index < 0 || index >= limit) {
    throw ContractViolation("joint action " + std::to_string(index) + " outside [0, " +
                            std::to_string(limit) + ")");
  }
  std::vector<UeCommand> commands(users_per_cell);
  for (int u = 0; u < users_per_cell; ++u) {
    commands[u].power_up = (index >> (2 * u)) & 1;
    commands[u].beam_up = (index >> (2 * u + 1)) & 1;
  }
  return commands;
}

int encode_action(std::span<const UeCommand> commands) {
  int index = 0;
  for (std::size_t u = 0; u < commands.size(); ++u) {
    index |= static_cast<int>(commands[u].power_up) << (2 * u);
    index |= static_cast<int>(commands[u].beam_up) << (2 * u + 1);
  }
  return index;
}

std::vector<double> apply_power_command(std::span<const double> prev_powers_dbm,
                                        std::span<const UeCommand> commands,
                                        double max_bs_power_mw, double min_ue_power_dbm) {
  if (prev_powers_dbm.size() != commands.size()) {
    throw ContractViolation("one power command per UE is required");
  }
  const std::size_t U = commands.size();
  std::vector<double> next(U);
  double total_mw = 0.0;
  for (std::size_t u = 0; u < U; ++u) {
    next[u] = std::max(prev_powers_dbm[u] + (commands[u].power_up ? 1.0 : -1.0), min_ue_power_dbm);
    total_mw += dbm_to_mw(next[u]);
  }
  if (total_mw > max_bs_power_mw) {
    for (std::size_t u = 0; u < U; ++u) {
      next[u] = std::max(prev_powers_dbm[u] - 1.0, min_ue_power_dbm);
    }
  }
  return next;
}

int apply_beam_command(int prev_index, bool step_up, int codebook_size) {
  if (prev_index < 0 || prev_index >= codebook_size) {
    throw ContractViolation("beam index out of range");
  }
  return std::clamp(prev_index + (step_up ? 1 : -1), 0, codebook_size - 1);
}

double cell_reward(std::span<const double> sinr, std::span<const double> inter_mw,
                   double gamma_min, double interference_threshold_mw, double punishment) {
  if (sinr.size() != inter_mw.size()) throw ContractViolation("sinr/interference size mismatch");
  double product = 1.0;
  for (std::size_t u = 0; u < sinr.size(); ++u) {
    if (!(sinr[u] > gamma_min) || !(inter_mw[u] < interference_threshold_mw)) return -punishment;
    product *= 1.0 + sinr[u];
  }
  return product;
}

}  // namespace smart
