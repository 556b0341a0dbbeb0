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

#include "smart/common/random.hpp"
#include "smart/env/channel.hpp"
#include "smart/env/codebook.hpp"
#include "smart/env/config.hpp"
#include "smart/env/geometry.hpp"
#include "smart/env/physics.hpp"
#include "smart/rl/agent_io.hpp"

namespace smart {

// Everything measured at one step for one (power, beam, channel) snapshot.
struct StepPhysics {
  PowerTable table;
  std::vector<double> sinr;            // per (cell, UE), linear
  std::vector<double> inter_estimate;  // per (cell, UE), mW, from SINR reports
};

// The simulated network seen by all agents: geometry, users, fading and the
// per-UE powers (dBm) and beam indices currently configured at every BS.
class NetworkEnvironment {
 public:
  NetworkEnvironment(const NetworkConfig& config, Rng rng);

  // New episode: fresh users and channels (kept as-is under static
  // channels once drawn), powers and beams back to their start values.
  void reset();
  // One step of mobility and fading.
  void advance();
  StepPhysics measure() const;

  StateVector observe(int cell) const;

  void set_cell_config(int cell, std::span<const double> powers_dbm, std::span<const int> beams);
  std::span<const double> cell_powers_dbm(int cell) const;
  std::span<const int> cell_beams(int cell) const;

  const std::vector<double>& powers_dbm() const { return powers_dbm_; }
  const std::vector<int>& beams() const { return beams_; }
  std::vector<double> powers_mw() const;
  double cell_power_mw(int cell) const;

  const NetworkConfig& config() const { return config_; }
  const CellLayout& layout() const { return layout_; }
  const Codebook& codebook() const { return codebook_; }
  const UserSet& users() const { return users_; }
  const ChannelSet& channels() const { return channels_; }

  // Beam UE u of every cell starts an episode on: the UEs are spread evenly
  // across the codebook, so no two start on the same beam when 2^r >= U.
  int initial_beam(int ue) const;

 private:
  NetworkConfig config_;
  Rng rng_;
  CellLayout layout_;
  Codebook codebook_;
  UserSet users_;
  ChannelSet channels_;
  bool drawn_ = false;
  std::vector<double> powers_dbm_;
  std::vector<int> beams_;
};

}  // namespace smart
