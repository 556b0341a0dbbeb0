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


#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "smart/common/errors.hpp"
#include "smart/sharing/sharing.hpp"
#include "support.hpp"

namespace smart {
namespace {

std::vector<Experience> cell_experiences(int cell, std::int64_t step, int users = 3) {
  std::vector<Experience> out;
  for (int u = 0; u < users; ++u) out.push_back(test::make_experience(cell, u, step, 1.0 + u, users));
  return out;
}

std::int64_t experiences_in(const std::vector<SharePacket>& packets) {
  std::int64_t n = 0;
  for (const auto& p : packets) n += static_cast<std::int64_t>(p.experiences.size());
  return n;
}

TEST(SmartSelect, QuietUsersShareNothing) {
  std::vector<Experience> ex = cell_experiences(0, 4);
  std::vector<double> inter(3, 1e-15);
  auto packets = smart_select(0, 4, ex, {inter, {}}, 1e-14, 2, Attribution::kMeasured);
  EXPECT_TRUE(packets.empty());
}

TEST(SmartSelect, LoudUserIsShared) {
  std::vector<Experience> ex = cell_experiences(1, 4);
  std::vector<double> inter{1e-15, 6.738e-10, 1e-15};
  auto packets = smart_select(1, 4, ex, {inter, {}}, 1e-14, 2, Attribution::kMeasured);
  ASSERT_EQ(packets.size(), 1u);
  EXPECT_EQ(packets[0].sender, 1);
  EXPECT_EQ(packets[0].receiver, 0);
  ASSERT_EQ(packets[0].experiences.size(), 1u);
  EXPECT_EQ(packets[0].experiences[0], ex[1]);
}

TEST(SmartSelect, InfiniteThresholdBehavesLikeShareNothing) {
  std::vector<Experience> ex = cell_experiences(0, 0);
  std::vector<double> inter{1.0, 1e3, 1e9};
  auto packets = smart_select(0, 0, ex, {inter, {}}, std::numeric_limits<double>::infinity(), 3,
                              Attribution::kMeasured);
  EXPECT_EQ(experiences_in(packets), experiences_in(share_nothing(0, 0, ex, 3)));
}

TEST(SmartSelect, MeasuredModeBroadcastsToEveryNeighbour) {
  std::vector<Experience> ex = cell_experiences(1, 2);
  std::vector<double> inter{2e-11, 0.0, 0.0};
  auto packets = smart_select(1, 2, ex, {inter, {}}, 1e-11, 4, Attribution::kMeasured);
  ASSERT_EQ(packets.size(), 3u);
  EXPECT_EQ(packets[0].receiver, 0);
  EXPECT_EQ(packets[1].receiver, 2);
  EXPECT_EQ(packets[2].receiver, 3);
}

TEST(SmartSelect, GenieModeTestsEachSource) {
  // Cell 0 of three; UE 0 hears cell 2 only, UE 2 hears cell 1 only.
  std::vector<Experience> ex = cell_experiences(0, 2);
  std::vector<double> aggregate{5e-11, 0.0, 5e-11};
  std::vector<double> per_source{0.0, 0.0, 5e-11,  //
                                 0.0, 0.0, 0.0,    //
                                 0.0, 5e-11, 0.0};
  auto packets = smart_select(0, 2, ex, {aggregate, per_source}, 1e-11, 3, Attribution::kGenie);
  ASSERT_EQ(packets.size(), 2u);
  EXPECT_EQ(packets[0].receiver, 1);
  EXPECT_EQ(packets[0].experiences[0].ue, 2);
  EXPECT_EQ(packets[1].receiver, 2);
  EXPECT_EQ(packets[1].experiences[0].ue, 0);
}

TEST(SmartSelect, SubsetOfShareAllAndMonotoneInThreshold) {
  Rng rng = make_stream(61, 0);
  std::uniform_real_distribution<double> dbm(-130.0, -90.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Experience> ex = cell_experiences(0, trial);
    std::vector<double> inter(3);
    for (double& v : inter) v = std::pow(10.0, dbm(rng) / 10.0);
    auto loose = smart_select(0, trial, ex, {inter, {}}, 1e-11, 2, Attribution::kMeasured);
    auto strict = smart_select(0, trial, ex, {inter, {}}, 1e-10, 2, Attribution::kMeasured);
    EXPECT_LE(experiences_in(strict), experiences_in(loose));
    EXPECT_LE(experiences_in(loose), experiences_in(share_all(0, trial, ex, 2)));
  }
}

TEST(ShareAll, SendsEveryExperienceToTheOtherCell) {
  std::vector<Experience> ex = cell_experiences(0, 0);
  auto packets = share_all(0, 0, ex, 2);
  ASSERT_EQ(packets.size(), 1u);
  EXPECT_EQ(packets[0].receiver, 1);
  EXPECT_EQ(packets[0].experiences, ex);
}

TEST(ShareAll, SingleCellTransmitsNothing) {
  std::vector<Experience> ex = cell_experiences(0, 0);
  std::vector<double> inter(3, 1.0);
  EXPECT_TRUE(share_all(0, 0, ex, 1).empty());
  EXPECT_TRUE(share_nothing(0, 0, ex, 1).empty());
  EXPECT_TRUE(smart_select(0, 0, ex, {inter, {}}, 0.0, 1, Attribution::kMeasured).empty());
}

TEST(Deliver, EmptyPacketSetChangesNothing) {
  std::vector<ReplayBuffer> buffers(2, ReplayBuffer(10));
  OverheadLedger ledger;
  deliver({}, buffers, ledger, 3);
  EXPECT_TRUE(buffers[0].empty());
  EXPECT_EQ(ledger.total_experiences(), 0);
}

TEST(Deliver, FullBufferEvictsOldest) {
  std::vector<ReplayBuffer> buffers(2, ReplayBuffer(3));
  for (int i = 0; i < 3; ++i) buffers[1].insert(test::make_experience(1, i, 0, 0.0));
  OverheadLedger ledger;
  deliver(share_all(0, 5, cell_experiences(0, 5), 2), buffers, ledger, 3);
  ASSERT_EQ(buffers[1].size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(buffers[1].at(i).cell, 0);
    EXPECT_EQ(buffers[1].at(i).ue, static_cast<int>(i));
  }
  EXPECT_EQ(buffers[1].received_inserted(), 3);
}

TEST(Deliver, DeliveredExperiencesAreIdentical) {
  std::vector<ReplayBuffer> buffers(2, ReplayBuffer(10));
  OverheadLedger ledger;
  std::vector<Experience> ex = cell_experiences(1, 7);
  ex[2].reward = 0.1 + 0.2;  // not exactly representable in a short decimal
  deliver(share_all(1, 7, ex, 2), buffers, ledger, 3);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(buffers[0].at(i), ex[i]);
}

TEST(Deliver, LedgerCountsShareAllSteps) {
  std::vector<ReplayBuffer> buffers(2, ReplayBuffer(100));
  OverheadLedger ledger;
  const int k = 9;
  for (int t = 0; t < k; ++t) {
    ledger.begin_step(t, 2);
    std::vector<SharePacket> packets;
    for (int a = 0; a < 2; ++a) {
      auto p = share_all(a, t, cell_experiences(a, t), 2);
      packets.insert(packets.end(), p.begin(), p.end());
    }
    deliver(std::move(packets), buffers, ledger, 3);
  }
  EXPECT_EQ(ledger.total_experiences(), 6 * k);
  EXPECT_EQ(ledger.total_scalars(), 6 * k * experience_scalars(3));
  const OverheadLedger::Entry* row = ledger.find(4, 1);
  ASSERT_NE(row, nullptr);
  EXPECT_EQ(row->experiences_tx, 3);
  EXPECT_EQ(row->experiences_rx, 3);
  EXPECT_EQ(overhead_report(ledger).zero_share_fraction, 0.0);
}

TEST(Deliver, OrderIsSenderReceiverUe) {
  std::vector<ReplayBuffer> buffers(3, ReplayBuffer(100));
  OverheadLedger ledger;
  std::vector<SharePacket> packets;
  auto from2 = share_all(2, 0, cell_experiences(2, 0), 3);
  auto from1 = share_all(1, 0, cell_experiences(1, 0), 3);
  std::reverse(from1[0].experiences.begin(), from1[0].experiences.end());
  packets.insert(packets.end(), from2.begin(), from2.end());
  packets.insert(packets.end(), from1.begin(), from1.end());
  deliver(std::move(packets), buffers, ledger, 3);
  ASSERT_EQ(buffers[0].size(), 6u);
  std::vector<std::pair<int, int>> got;
  for (std::size_t i = 0; i < 6; ++i) got.emplace_back(buffers[0].at(i).cell, buffers[0].at(i).ue);
  std::vector<std::pair<int, int>> want{{1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}};
  EXPECT_EQ(got, want);
}

TEST(Deliver, SelfAddressedPacketIsAContractViolation) {
  std::vector<ReplayBuffer> buffers(2, ReplayBuffer(10));
  OverheadLedger ledger;
  std::vector<SharePacket> bad{{0, 0, 0, cell_experiences(0, 0)}};
  EXPECT_THROW(deliver(bad, buffers, ledger, 3), ContractViolation);
}

TEST(CrduReward, ProductOrPunishment) {
  std::vector<double> ok{8.0, 2.0};
  EXPECT_EQ(crdu_reward(ok, 100.0), 16.0);
  std::vector<double> punished{8.0, -100.0};
  EXPECT_EQ(crdu_reward(punished, 100.0), -100.0);
  std::vector<double> one{5.5};
  EXPECT_EQ(crdu_reward(one, 100.0), 5.5);
  std::vector<double> lone_punished{-100.0};
  EXPECT_EQ(crdu_reward(lone_punished, 100.0), -100.0);
}

TEST(CtdeSync, CopiesCentralAndBooksScalars) {
  QNetwork central(12, 5, 5, 64);
  Rng rng = make_stream(62, 0);
  central.initialize(rng);
  std::vector<QNetwork> agents(2, QNetwork(12, 5, 5, 64));
  OverheadLedger ledger;
  const int T = 7;
  for (int t = 0; t < T; ++t) {
    ledger.begin_step(t, 2);
    EXPECT_TRUE(ctde_sync(central, agents, t, 1, ledger));
  }
  for (const QNetwork& a : agents) EXPECT_EQ(a, central);
  EXPECT_EQ(ledger.total_scalars(), T * 2 * central.parameter_count());
  EXPECT_EQ(ledger.total_experiences(), 0);
}

TEST(CtdeSync, PeriodSkipsOffSteps) {
  QNetwork central(4, 2, 2, 16);
  std::vector<QNetwork> agents(3, central);
  OverheadLedger ledger;
  int syncs = 0;
  for (int t = 1; t <= 10; ++t) syncs += ctde_sync(central, agents, t, 4, ledger);
  EXPECT_EQ(syncs, 2);
  EXPECT_EQ(ledger.total_scalars(), 2 * 3 * central.parameter_count());
}

TEST(OverheadReport, FractionAndHistogram) {
  OverheadLedger ledger;
  for (int t = 0; t < 4; ++t) ledger.begin_step(t, 1);
  ledger.add_tx(2, 0, 2, 54);
  OverheadSummary s = overhead_report(ledger);
  EXPECT_EQ(s.agent_steps, 4);
  EXPECT_EQ(s.zero_share_fraction, 0.75);
  EXPECT_EQ(s.histogram.at(0), 3);
  EXPECT_EQ(s.histogram.at(2), 1);
  EXPECT_EQ(s.total_scalars, 54);
}

TEST(OverheadReport, SilentLedgerIsFullyZeroShare) {
  OverheadLedger ledger;
  for (int t = 0; t < 10; ++t) ledger.begin_step(t, 2);
  EXPECT_EQ(overhead_report(ledger).zero_share_fraction, 1.0);
}

}  // namespace
}  // namespace smart
