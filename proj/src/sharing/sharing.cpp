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


#include "smart/sharing/sharing.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "smart/common/errors.hpp"

namespace smart {

void OverheadLedger::begin_step(std::int64_t step, int agents) {
  for (int a = 0; a < agents; ++a) row(step, a);
}

OverheadLedger::Entry& OverheadLedger::row(std::int64_t step, int agent) {
  auto [it, inserted] = rows_.try_emplace({step, agent});
  if (inserted) {
    it->second.step = step;
    it->second.agent = agent;
  }
  return it->second;
}

void OverheadLedger::add_tx(std::int64_t step, int agent, std::int64_t experiences,
                            std::int64_t scalars) {
  if (experiences < 0 || scalars < 0) throw ContractViolation("ledger counts must be nonnegative");
  Entry& e = row(step, agent);
  e.experiences_tx += experiences;
  e.scalars_tx += scalars;
  total_experiences_ += experiences;
  total_scalars_ += scalars;
}

void OverheadLedger::add_rx(std::int64_t step, int agent, std::int64_t experiences) {
  if (experiences < 0) throw ContractViolation("ledger counts must be nonnegative");
  row(step, agent).experiences_rx += experiences;
}

std::vector<OverheadLedger::Entry> OverheadLedger::entries() const {
  std::vector<Entry> out;
  out.reserve(rows_.size());
  for (const auto& [key, entry] : rows_) out.push_back(entry);
  return out;
}

const OverheadLedger::Entry* OverheadLedger::find(std::int64_t step, int agent) const {
  auto it = rows_.find({step, agent});
  return it == rows_.end() ? nullptr : &it->second;
}

std::vector<SharePacket> smart_select(int sender, std::int64_t step,
                                      std::span<const Experience> experiences,
                                      const InterferenceView& interference, double threshold_mw,
                                      int cells, Attribution mode) {
  const std::size_t U = experiences.size();
  if (interference.aggregate.size() != U) {
    throw ContractViolation("one aggregate interference value per UE is required");
  }
  if (mode == Attribution::kGenie &&
      interference.per_source.size() != U * static_cast<std::size_t>(cells)) {
    throw ContractViolation("genie attribution needs U x L per-source interference values");
  }

  std::vector<SharePacket> packets;
  for (int j = 0; j < cells; ++j) {
    if (j == sender) continue;
    SharePacket packet{sender, j, step, {}};
    for (std::size_t u = 0; u < U; ++u) {
      double level = mode == Attribution::kMeasured ? interference.aggregate[u]
                                                    : interference.per_source[u * cells + j];
      if (level > threshold_mw) packet.experiences.push_back(experiences[u]);
    }
    if (!packet.experiences.empty()) packets.push_back(std::move(packet));
  }
  return packets;
}

std::vector<SharePacket> share_all(int sender, std::int64_t step,
                                   std::span<const Experience> experiences, int cells) {
  std::vector<SharePacket> packets;
  if (experiences.empty()) return packets;
  for (int j = 0; j < cells; ++j) {
    if (j == sender) continue;
    packets.push_back({sender, j, step, {experiences.begin(), experiences.end()}});
  }
  return packets;
}

std::vector<SharePacket> share_nothing(int, std::int64_t, std::span<const Experience>, int) {
  return {};
}

DeliveryCounts deliver(std::vector<SharePacket> packets, std::span<ReplayBuffer> buffers,
                       OverheadLedger& ledger, int users_per_cell) {
  DeliveryCounts counts;
  counts.sent.assign(buffers.size(), 0);
  counts.received.assign(buffers.size(), 0);
  std::stable_sort(packets.begin(), packets.end(), [](const SharePacket& a, const SharePacket& b) {
    return std::tie(a.sender, a.receiver) < std::tie(b.sender, b.receiver);
  });
  const std::int64_t width = experience_scalars(users_per_cell);
  for (auto& packet : packets) {
    if (packet.experiences.empty()) continue;
    if (packet.sender == packet.receiver) throw ContractViolation("an agent cannot share with itself");
    if (packet.receiver < 0 || packet.receiver >= static_cast<int>(buffers.size()) ||
        packet.sender < 0 || packet.sender >= static_cast<int>(buffers.size())) {
      throw ContractViolation("packet addressed to an unknown agent");
    }
    std::stable_sort(packet.experiences.begin(), packet.experiences.end(),
                     [](const Experience& a, const Experience& b) { return a.ue < b.ue; });
    const auto n = static_cast<std::int64_t>(packet.experiences.size());
    for (auto& e : packet.experiences) buffers[packet.receiver].insert(std::move(e), Origin::kReceived);
    ledger.add_tx(packet.step, packet.sender, n, n * width);
    ledger.add_rx(packet.step, packet.receiver, n);
    counts.sent[packet.sender] += n;
    counts.received[packet.receiver] += n;
  }
  return counts;
}

double crdu_reward(std::span<const double> cell_rewards, double punishment) {
  if (cell_rewards.empty()) throw ContractViolation("crdu_reward needs at least one cell");
  double product = 1.0;
  for (double r : cell_rewards) {
    // An unpunished cell reward is a product of (1 + gamma) terms, so > 0.
    if (r <= 0.0) return -punishment;
    product *= r;
  }
  return product;
}

bool ctde_sync(const QNetwork& central, std::span<QNetwork> agents, std::int64_t step, int period,
               OverheadLedger& ledger) {
  if (period < 1) throw ContractViolation("sync period must be >= 1");
  if (step % period != 0) return false;
  for (std::size_t a = 0; a < agents.size(); ++a) {
    agents[a] = central;
    ledger.add_tx(step, static_cast<int>(a), 0, central.parameter_count());
  }
  return true;
}

OverheadSummary overhead_report(const OverheadLedger& ledger) {
  OverheadSummary summary;
  summary.total_experiences = ledger.total_experiences();
  summary.total_scalars = ledger.total_scalars();
  std::int64_t silent = 0;
  for (const auto& e : ledger.entries()) {
    ++summary.agent_steps;
    ++summary.histogram[e.experiences_tx];
    if (e.experiences_tx == 0) ++silent;
  }
  summary.zero_share_fraction =
      summary.agent_steps == 0 ? 1.0
                               : static_cast<double>(silent) / static_cast<double>(summary.agent_steps);
  return summary;
}

}  // namespace smart
