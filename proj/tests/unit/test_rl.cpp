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

#include <cmath>
#include <set>

#include "smart/common/errors.hpp"
#include "smart/common/units.hpp"
#include "smart/rl/agent_io.hpp"
#include "smart/rl/replay_buffer.hpp"
#include "support.hpp"

namespace smart {
namespace {

TEST(EncodeState, MinimumInputsGiveZeroPowerAndBeamSlots) {
  NetworkConfig c;
  std::vector<double> p(3, c.min_ue_power_dbm());
  std::vector<int> b(3, 0);
  std::vector<Point> xy{{1.0, 2.0}, {0.0, 0.0}, {-112.0, 0.0}};
  StateVector s = encode_state(p, b, xy, c);
  ASSERT_EQ(s.size(), 12u);
  for (int u = 0; u < 3; ++u) {
    EXPECT_EQ(s[4 * u], 0.0);
    EXPECT_EQ(s[4 * u + 1], 0.0);
  }
  EXPECT_EQ(s[6], 0.0);
  EXPECT_EQ(s[7], 0.0);
  EXPECT_EQ(s[10], -1.0);
}

TEST(EncodeState, MaximumInputsGiveOne) {
  NetworkConfig c;
  std::vector<double> p(3, c.max_bs_power_dbm());
  std::vector<int> b(3, c.codebook_size() - 1);
  std::vector<Point> xy(3);
  StateVector s = encode_state(p, b, xy, c);
  EXPECT_NEAR(s[0], 1.0, 1e-15);
  EXPECT_EQ(s[1], 1.0);
}

TEST(EncodeState, PowerSlotRoundTrips) {
  NetworkConfig c;
  for (double dbm : {0.0, 3.5, 12.25, c.initial_ue_power_dbm(), c.max_bs_power_dbm()}) {
    std::vector<double> p{dbm, 1.0, 2.0};
    std::vector<int> b{0, 0, 0};
    std::vector<Point> xy(3);
    StateVector s = encode_state(p, b, xy, c);
    EXPECT_NEAR(decode_power_slot(s[0], c), dbm, 1e-9);
  }
}

TEST(EncodeState, WrongLengthIsAContractViolation) {
  NetworkConfig c;
  std::vector<double> p(2, 0.0);
  std::vector<int> b(3, 0);
  std::vector<Point> xy(3);
  EXPECT_THROW(encode_state(p, b, xy, c), ContractViolation);
}

TEST(DecodeAction, ExtremesAndWorkedIndex) {
  for (const UeCommand& cmd : decode_action(0, 3)) {
    EXPECT_FALSE(cmd.power_up);
    EXPECT_FALSE(cmd.beam_up);
  }
  for (const UeCommand& cmd : decode_action(63, 3)) {
    EXPECT_TRUE(cmd.power_up);
    EXPECT_TRUE(cmd.beam_up);
  }
  std::vector<UeCommand> five = decode_action(5, 3);
  EXPECT_EQ(five[0], (UeCommand{true, false}));
  EXPECT_EQ(five[1], (UeCommand{true, false}));
  EXPECT_EQ(five[2], (UeCommand{false, false}));
}

TEST(DecodeAction, ExhaustiveRoundTripUpToFourUsers) {
  for (int U = 1; U <= 4; ++U) {
    for (int index = 0; index < (1 << (2 * U)); ++index) {
      std::vector<UeCommand> cmds = decode_action(index, U);
      ASSERT_EQ(static_cast<int>(cmds.size()), U);
      for (int u = 0; u < U; ++u) {
        ASSERT_EQ(cmds[u].power_up, ((index >> (2 * u)) & 1) == 1);
        ASSERT_EQ(cmds[u].beam_up, ((index >> (2 * u + 1)) & 1) == 1);
      }
      ASSERT_EQ(encode_action(cmds), index);
    }
  }
}

TEST(DecodeAction, OutOfRangeIsAContractViolation) {
  EXPECT_THROW(decode_action(64, 3), ContractViolation);
  EXPECT_THROW(decode_action(-1, 3), ContractViolation);
}

TEST(PowerCommand, IncreaseWithAmpleBudget) {
  std::vector<double> p{30.0};
  std::vector<UeCommand> cmd{{true, false}};
  EXPECT_EQ(apply_power_command(p, cmd, dbm_to_mw(40.0), 0.0)[0], 31.0);
}

TEST(PowerCommand, OverBudgetPushesEveryUeDown) {
  // 2 * 10^3.8 mW exceeds 10^4 mW.
  std::vector<double> p{37.0, 37.0};
  std::vector<UeCommand> cmd{{true, false}, {true, true}};
  std::vector<double> next = apply_power_command(p, cmd, dbm_to_mw(40.0), 0.0);
  EXPECT_EQ(next[0], 36.0);
  EXPECT_EQ(next[1], 36.0);
}

TEST(PowerCommand, MixedCommandsOverBudgetAllDecrease) {
  std::vector<double> p{39.5, 20.0};
  std::vector<UeCommand> cmd{{true, false}, {false, false}};
  std::vector<double> next = apply_power_command(p, cmd, dbm_to_mw(40.0), 0.0);
  EXPECT_EQ(next[0], 38.5);
  EXPECT_EQ(next[1], 19.0);
}

TEST(PowerCommand, FloorClampsDecrease) {
  std::vector<double> p{0.0, 0.4};
  std::vector<UeCommand> cmd{{false, false}, {false, false}};
  std::vector<double> next = apply_power_command(p, cmd, dbm_to_mw(40.0), 0.0);
  EXPECT_EQ(next[0], 0.0);
  EXPECT_EQ(next[1], 0.0);
}

TEST(PowerCommand, BudgetHoldsUnderRandomCommandSequences) {
  NetworkConfig c;
  Rng rng = make_stream(31, 0);
  std::uniform_int_distribution<int> pick(0, c.joint_actions() - 1);
  std::vector<double> p(3, c.initial_ue_power_dbm());
  for (int t = 0; t < 5000; ++t) {
    std::vector<UeCommand> cmd = decode_action(pick(rng), 3);
    p = apply_power_command(p, cmd, c.max_bs_power_mw, c.min_ue_power_dbm());
    double total = 0.0;
    for (double dbm : p) {
      ASSERT_GE(dbm, c.min_ue_power_dbm());
      total += dbm_to_mw(dbm);
    }
    ASSERT_LE(total, c.max_bs_power_mw);
  }
}

TEST(BeamCommand, StepsAndSaturates) {
  EXPECT_EQ(apply_beam_command(3, true, 8), 4);
  EXPECT_EQ(apply_beam_command(3, false, 8), 2);
  EXPECT_EQ(apply_beam_command(0, false, 8), 0);
  EXPECT_EQ(apply_beam_command(7, true, 8), 7);
  EXPECT_THROW(apply_beam_command(8, true, 8), ContractViolation);
}

constexpr double kGammaMin = 0.50118723362727224;
constexpr double kThreshold = 1e-11;

TEST(Reward, WorkedExamples) {
  std::vector<double> one{1.0};
  std::vector<double> quiet{1e-12};
  EXPECT_EQ(cell_reward(one, quiet, kGammaMin, kThreshold, 100.0), 2.0);

  std::vector<double> weak{1.0, 0.4};
  std::vector<double> quiet2{1e-12, 1e-12};
  EXPECT_EQ(cell_reward(weak, quiet2, kGammaMin, kThreshold, 100.0), -100.0);

  std::vector<double> two{1.0, 3.0};
  EXPECT_EQ(cell_reward(two, quiet2, kGammaMin, kThreshold, 100.0), 8.0);
}

TEST(Reward, InterferenceAboveThresholdPunishes) {
  std::vector<double> g{2.0, 2.0};
  std::vector<double> inter{1e-12, 2e-11};
  EXPECT_EQ(cell_reward(g, inter, kGammaMin, kThreshold, 100.0), -100.0);
}

TEST(Reward, BoundariesAreStrict) {
  std::vector<double> at_gamma{kGammaMin};
  std::vector<double> quiet{0.0};
  EXPECT_EQ(cell_reward(at_gamma, quiet, kGammaMin, kThreshold, 100.0), -100.0);
  std::vector<double> fine{1.0};
  std::vector<double> at_threshold{kThreshold};
  EXPECT_EQ(cell_reward(fine, at_threshold, kGammaMin, kThreshold, 100.0), -100.0);
}

// Independent restatement: count violations first, then multiply.
double reference_reward(const std::vector<double>& g, const std::vector<double>& inter, double gmin,
                        double imin, double punish) {
  int violations = 0;
  for (std::size_t u = 0; u < g.size(); ++u) violations += (g[u] <= gmin) + (inter[u] >= imin);
  if (violations > 0) return -punish;
  double r = 1.0;
  for (double x : g) r *= 1.0 + x;
  return r;
}

TEST(Reward, MatchesReferenceOnRandomInputs) {
  Rng rng = make_stream(32, 0);
  std::uniform_real_distribution<double> db(-10.0, 20.0);
  std::uniform_real_distribution<double> dbm(-125.0, -95.0);
  std::uniform_int_distribution<int> users(1, 4);
  for (int i = 0; i < 10000; ++i) {
    const int U = users(rng);
    std::vector<double> g(U);
    std::vector<double> inter(U);
    for (int u = 0; u < U; ++u) {
      g[u] = db_to_linear(db(rng));
      inter[u] = dbm_to_mw(dbm(rng));
    }
    const double got = cell_reward(g, inter, kGammaMin, kThreshold, 100.0);
    const double want = reference_reward(g, inter, kGammaMin, kThreshold, 100.0);
    ASSERT_EQ(got < 0, want < 0);
    ASSERT_LE(std::abs(got - want), 1e-12 * std::abs(want));
  }
}

TEST(Experience, ScalarCostPerExperience) {
  EXPECT_EQ(experience_scalars(3), 27);
  EXPECT_EQ(experience_scalars(1), 11);
}

TEST(ReplayBuffer, EvictsOldestFirst) {
  ReplayBuffer buf(2);
  buf.insert(test::make_experience(0, 0, 1, 1.0));
  buf.insert(test::make_experience(0, 1, 2, 2.0));
  buf.insert(test::make_experience(0, 2, 3, 3.0), Origin::kReceived);
  EXPECT_EQ(buf.size(), 2u);
  EXPECT_EQ(buf.at(0).step, 2);
  EXPECT_EQ(buf.at(1).step, 3);
  EXPECT_EQ(buf.local_inserted(), 2);
  EXPECT_EQ(buf.received_inserted(), 1);
}

TEST(ReplayBuffer, SizeNeverExceedsCapacity) {
  ReplayBuffer buf(7);
  for (int i = 0; i < 50; ++i) {
    buf.insert(test::make_experience(0, 0, i, 0.0));
    ASSERT_LE(buf.size(), 7u);
    ASSERT_EQ(buf.at(0).step, std::max(0, i - 6));
  }
}

TEST(ReplayBuffer, NotReadyBelowBatchSize) {
  ReplayBuffer buf(10);
  Rng rng = make_stream(33, 0);
  buf.insert(test::make_experience(0, 0, 0, 0.0));
  EXPECT_FALSE(buf.sample(2, rng).has_value());
  EXPECT_TRUE(buf.sample(1, rng).has_value());
}

TEST(ReplayBuffer, FullBatchReturnsEveryEntryOnce) {
  ReplayBuffer buf(5);
  for (int i = 0; i < 5; ++i) buf.insert(test::make_experience(0, 0, i, 0.0));
  Rng rng = make_stream(34, 0);
  auto batch = buf.sample(5, rng);
  ASSERT_TRUE(batch.has_value());
  std::set<std::int64_t> steps;
  for (const Experience* e : *batch) steps.insert(e->step);
  EXPECT_EQ(steps.size(), 5u);
}

TEST(ReplayBuffer, BatchesAreWithoutReplacement) {
  ReplayBuffer buf(20);
  for (int i = 0; i < 20; ++i) buf.insert(test::make_experience(0, 0, i, 0.0));
  Rng rng = make_stream(35, 0);
  for (int trial = 0; trial < 500; ++trial) {
    auto batch = buf.sample(8, rng);
    std::set<const Experience*> seen(batch->begin(), batch->end());
    ASSERT_EQ(seen.size(), 8u);
  }
}

TEST(ReplayBuffer, SingleDrawsAreUniform) {
  ReplayBuffer buf(10);
  for (int i = 0; i < 10; ++i) buf.insert(test::make_experience(0, 0, i, 0.0));
  Rng rng = make_stream(36, 0);
  std::vector<int> counts(10, 0);
  const int n = 10000;
  for (int i = 0; i < n; ++i) ++counts[(*buf.sample(1, rng))[0]->step];
  for (int c : counts) EXPECT_NEAR(static_cast<double>(c) / n, 0.10, 0.015);
}

}  // namespace
}  // namespace smart
