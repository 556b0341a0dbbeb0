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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "smart/env/config.hpp"
#include "smart/rl/qnetwork.hpp"
#include "smart/sharing/sharing.hpp"
#include "smart/trainer/metrics.hpp"

namespace smart {

enum class Phase { kObserve, kAct, kStore, kShare, kDeliver, kTrain, kAdvance };

struct TrainerHooks {
  // Called as each phase of a step runs; agent is -1 for network-wide phases.
  std::function<void(Phase phase, std::int64_t step, int agent)> on_phase;
};

struct RunArtifacts {
  RunConfig config;
  std::uint64_t seed = 0;
  // One acting network per agent (copies of the central network for CTDE).
  std::vector<QNetwork> networks;
  MetricsLog metrics;
  OverheadLedger ledger;
  std::int64_t gradient_steps = 0;
  // Set when the run stopped early on a non-finite loss or reward.
  std::optional<std::string> abort_reason;
};

// Runs the episodic act -> store -> share -> train loop for the configured
// framework. `single_thread` false lets per-agent act and train phases run
// on worker threads; results are identical either way.
RunArtifacts run_training(const RunConfig& config, const TrainerHooks* hooks = nullptr,
                          bool single_thread = true);

RunArtifacts run_training(RunConfig config, Framework framework, std::uint64_t seed);

// Greedy (epsilon = 0) rollouts with frozen networks: no learning, no
// sharing. Episodes are drawn from the evaluation stream of `seed`.
MetricsLog evaluate(const std::vector<QNetwork>& networks, const RunConfig& config, int episodes,
                    std::uint64_t seed);

}  // namespace smart
