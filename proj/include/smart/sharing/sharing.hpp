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
#include <map>
#include <span>
#include <vector>

#include "smart/env/config.hpp"
#include "smart/rl/agent_io.hpp"
#include "smart/rl/qnetwork.hpp"
#include "smart/rl/replay_buffer.hpp"

namespace smart {

// Experiences one agent transmits to one neighbour at one step. Packets are
// only materialised when they carry at least one experience.
struct SharePacket {
  int sender = 0;
  int receiver = 0;
  std::int64_t step = 0;
  std::vector<Experience> experiences;
};

// Transmissions per (step, agent). Rows exist for every agent at every step
// opened with begin_step, so silent agents show up as zero rows.
class OverheadLedger {
 public:
  struct Entry {
    std::int64_t step = 0;
    int agent = 0;
    std::int64_t experiences_tx = 0;
    std::int64_t scalars_tx = 0;
    std::int64_t experiences_rx = 0;
  };

  void begin_step(std::int64_t step, int agents);
  void add_tx(std::int64_t step, int agent, std::int64_t experiences, std::int64_t scalars);
  void add_rx(std::int64_t step, int agent, std::int64_t experiences);

  // Rows ordered by (step, agent).
  std::vector<Entry> entries() const;
  const Entry* find(std::int64_t step, int agent) const;
  std::int64_t total_experiences() const { return total_experiences_; }
  std::int64_t total_scalars() const { return total_scalars_; }

 private:
  Entry& row(std::int64_t step, int agent);

  std::map<std::pair<std::int64_t, int>, Entry> rows_;
  std::int64_t total_experiences_ = 0;
  std::int64_t total_scalars_ = 0;
};

// Inter-cell interference seen by the sender's UEs. `aggregate` holds one
// value per UE (the SINR-report estimate); `per_source` holds U x L values at
// ue * L + source (simulator-known split, genie mode only).
struct InterferenceView {
  std::span<const double> aggregate;
  std::span<const double> per_source;
};

// Selective sharing. Measured mode: UE u's experience goes to every
// neighbour when its aggregate estimate exceeds the threshold. Genie mode: it
// goes to neighbour j when the power received from j exceeds the threshold.
std::vector<SharePacket> smart_select(int sender, std::int64_t step,
                                      std::span<const Experience> experiences,
                                      const InterferenceView& interference, double threshold_mw,
                                      int cells, Attribution mode);

std::vector<SharePacket> share_all(int sender, std::int64_t step,
                                   std::span<const Experience> experiences, int cells);

std::vector<SharePacket> share_nothing(int sender, std::int64_t step,
                                       std::span<const Experience> experiences, int cells);

struct DeliveryCounts {
  std::vector<std::int64_t> sent;      // per sender
  std::vector<std::int64_t> received;  // per receiver
};

// Inserts every experience into its receiver's buffer in (sender, receiver,
// UE) order and books the transmissions in the ledger.
DeliveryCounts deliver(std::vector<SharePacket> packets, std::span<ReplayBuffer> buffers,
                       OverheadLedger& ledger, int users_per_cell);

// Common reward of the central controller: -punishment if any cell was
// punished, else the product of the per-cell rewards (the network-wide
// product of 1 + gamma).
double crdu_reward(std::span<const double> cell_rewards, double punishment);

// Copies the central weights into every agent when step is a multiple of
// period; books L x parameter-count scalars. Returns whether it synced.
bool ctde_sync(const QNetwork& central, std::span<QNetwork> agents, std::int64_t step, int period,
               OverheadLedger& ledger);

struct OverheadSummary {
  std::int64_t total_experiences = 0;
  std::int64_t total_scalars = 0;
  std::int64_t agent_steps = 0;
  // Fraction of (agent, step) rows that transmitted no experience.
  double zero_share_fraction = 0.0;
  // experiences transmitted in one (agent, step) row -> number of rows.
  std::map<std::int64_t, std::int64_t> histogram;
};

OverheadSummary overhead_report(const OverheadLedger& ledger);

}  // namespace smart
