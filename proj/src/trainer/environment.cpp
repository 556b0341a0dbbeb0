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


#include "smart/trainer/environment.hpp"

#include <cmath>

#include "smart/common/errors.hpp"
#include "smart/common/units.hpp"

namespace smart {

NetworkEnvironment::NetworkEnvironment(const NetworkConfig& config, Rng rng)
    : config_(config),
      rng_(std::move(rng)),
      layout_(build_layout(config)),
      codebook_(beam_codebook(config.antennas, config.phase_bits)) {
  reset();
}

void NetworkEnvironment::reset() {
  if (!config_.static_channels || !drawn_) {
    users_ = spawn_users(layout_, config_, rng_);
    channels_ = sample_channels(layout_, users_, nullptr, config_, rng_);
    drawn_ = true;
  }
  powers_dbm_.assign(config_.total_users(), config_.initial_ue_power_dbm());
  beams_.resize(config_.total_users());
  for (int i = 0; i < config_.total_users(); ++i) beams_[i] = initial_beam(i % config_.users_per_cell);
}

void NetworkEnvironment::advance() {
  if (config_.static_channels) return;
  users_ = step_mobility(users_, layout_, config_, rng_);
  channels_ = sample_channels(layout_, users_, &channels_, config_, rng_);
}

int NetworkEnvironment::initial_beam(int ue) const {
  const int U = config_.users_per_cell;
  if (U == 1) return (codebook_.size() - 1) / 2;
  return static_cast<int>(std::lround(static_cast<double>(ue) * (codebook_.size() - 1) / (U - 1)));
}

StepPhysics NetworkEnvironment::measure() const {
  StepPhysics out;
  std::vector<double> mw = powers_mw();
  out.table = received_powers(channels_, mw, beams_, codebook_);
  out.sinr = sinr(out.table, config_.noise_power_mw);
  out.inter_estimate =
      measure_inter_cell(out.sinr, mw, beams_, channels_, config_.noise_power_mw, codebook_);
  return out;
}

StateVector NetworkEnvironment::observe(int cell) const {
  std::vector<Point> offsets = relative_positions(users_, layout_, cell);
  return encode_state(cell_powers_dbm(cell), cell_beams(cell), offsets, config_);
}

void NetworkEnvironment::set_cell_config(int cell, std::span<const double> powers_dbm,
                                         std::span<const int> beams) {
  const auto U = static_cast<std::size_t>(config_.users_per_cell);
  if (cell < 0 || cell >= config_.cells) throw ContractViolation("cell index out of range");
  if (powers_dbm.size() != U || beams.size() != U) {
    throw ContractViolation("one power and beam per UE is required");
  }
  for (std::size_t u = 0; u < U; ++u) {
    if (beams[u] < 0 || beams[u] >= codebook_.size()) throw ContractViolation("beam index out of range");
    powers_dbm_[cell * U + u] = powers_dbm[u];
    beams_[cell * U + u] = beams[u];
  }
}

std::span<const double> NetworkEnvironment::cell_powers_dbm(int cell) const {
  const auto U = static_cast<std::size_t>(config_.users_per_cell);
  return std::span<const double>(powers_dbm_).subspan(cell * U, U);
}

std::span<const int> NetworkEnvironment::cell_beams(int cell) const {
  const auto U = static_cast<std::size_t>(config_.users_per_cell);
  return std::span<const int>(beams_).subspan(cell * U, U);
}

std::vector<double> NetworkEnvironment::powers_mw() const {
  std::vector<double> mw(powers_dbm_.size());
  for (std::size_t i = 0; i < mw.size(); ++i) mw[i] = dbm_to_mw(powers_dbm_[i]);
  return mw;
}

double NetworkEnvironment::cell_power_mw(int cell) const {
  double total = 0.0;
  for (double p : cell_powers_dbm(cell)) total += dbm_to_mw(p);
  return total;
}

}  // namespace smart
