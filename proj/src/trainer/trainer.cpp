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


#include "smart/trainer/trainer.hpp"

#include <cmath>
#include <future>
#include <string>

#include "smart/common/errors.hpp"
#include "smart/common/random.hpp"
#include "smart/rl/replay_buffer.hpp"
#include "smart/trainer/environment.hpp"

namespace smart {

namespace {

struct Learner {
  QNetwork net;
  QNetwork target;
  std::int64_t updates = 0;
};

void notify(const TrainerHooks* hooks, Phase phase, std::int64_t step, int agent) {
  if (hooks != nullptr && hooks->on_phase) hooks->on_phase(phase, step, agent);
}

template <typename Fn>
void for_each_agent(int agents, bool parallel, Fn&& fn) {
  if (!parallel || agents <= 1) {
    for (int a = 0; a < agents; ++a) fn(a);
    return;
  }
  std::vector<std::future<void>> jobs;
  jobs.reserve(agents);
  for (int a = 0; a < agents; ++a) jobs.push_back(std::async(std::launch::async, [&fn, a] { fn(a); }));
  for (auto& job : jobs) job.get();
}

template <typename T>
std::span<const T> cell_slice(const std::vector<T>& flat, int cell, int users_per_cell) {
  return std::span<const T>(flat).subspan(static_cast<std::size_t>(cell) * users_per_cell,
                                          users_per_cell);
}

QNetwork make_network(const RunConfig& config, Rng& rng) {
  QNetwork net(config.network.state_size(), config.training.hidden1, config.training.hidden2,
               config.network.joint_actions());
  net.initialize(rng);
  return net;
}

double train_learner(Learner& learner, const ReplayBuffer& buffer, Rng& rng,
                     const TrainingConfig& tc) {
  auto batch = buffer.sample(static_cast<std::size_t>(tc.batch_size), rng);
  if (!batch) throw ContractViolation("training requested before the buffer is ready");
  const bool refresh = (learner.updates + 1) % tc.target_period == 0;
  QNetwork before;
  if (refresh) before = learner.net;
  TrainOptions options{tc.discount, tc.learning_rate, tc.reward_scale, tc.grad_clip_norm};
  double loss = train_step(learner.net, learner.target, *batch, options);
  ++learner.updates;
  // The target lags the online network: after this update it holds the
  // weights the update started from.
  if (refresh) learner.target = std::move(before);
  return loss;
}

void apply_action(NetworkEnvironment& env, int cell, const JointAction& action) {
  const NetworkConfig& nc = env.config();
  std::vector<double> powers = apply_power_command(env.cell_powers_dbm(cell), action.commands,
                                                   nc.max_bs_power_mw, nc.min_ue_power_dbm());
  std::span<const int> prev_beams = env.cell_beams(cell);
  std::vector<int> beams(prev_beams.size());
  for (std::size_t u = 0; u < beams.size(); ++u) {
    beams[u] = apply_beam_command(prev_beams[u], action.commands[u].beam_up, env.codebook().size());
  }
  env.set_cell_config(cell, powers, beams);
}

void check_cell_constraints(const NetworkEnvironment& env, int cell) {
  const NetworkConfig& nc = env.config();
  const double total = env.cell_power_mw(cell);
  if (total > nc.max_bs_power_mw * (1.0 + 1e-12)) {
    throw ContractViolation("cell " + std::to_string(cell) + " exceeds its power budget (" +
                            std::to_string(total) + " mW)");
  }
  for (int b : env.cell_beams(cell)) {
    if (b < 0 || b >= env.codebook().size()) throw ContractViolation("beam index left the codebook");
  }
}

double episode_rate(const std::vector<double>& step_rates, SumRateMode mode) {
  if (mode == SumRateMode::kFinalStep) return step_rates.back();
  double total = 0.0;
  for (double r : step_rates) total += r;
  return total / static_cast<double>(step_rates.size());
}

}  // namespace

RunArtifacts run_training(const RunConfig& config, const TrainerHooks* hooks, bool single_thread) {
  config.validate();
  const NetworkConfig& nc = config.network;
  const TrainingConfig& tc = config.training;
  const int L = nc.cells;
  const int U = nc.users_per_cell;
  const Framework framework = config.framework;
  const bool ctde = framework == Framework::kCtde;
  const bool parallel = !single_thread;
  const std::int64_t width = experience_scalars(U);

  RunArtifacts art;
  art.config = config;
  art.seed = config.seed;
  art.metrics.cells = L;
  art.metrics.users_per_cell = U;
  art.metrics.sum_rate_mode = tc.sum_rate_mode;

  NetworkEnvironment env(nc, make_stream(config.seed, Stream::kEnvironment));
  std::vector<Rng> agent_rngs;
  for (int a = 0; a < L; ++a) agent_rngs.push_back(make_stream(config.seed, Stream::kAgentBase, a));
  Rng central_rng = make_stream(config.seed, Stream::kCentral);

  // CTDE trains a single central learner; everything else one learner per agent.
  std::vector<Learner> learners;
  std::vector<ReplayBuffer> buffers;
  std::vector<QNetwork> acting;
  const int learner_count = ctde ? 1 : L;
  for (int i = 0; i < learner_count; ++i) {
    Rng& rng = ctde ? central_rng : agent_rngs[i];
    QNetwork net = make_network(config, rng);
    learners.push_back({net, net, 0});
    buffers.emplace_back(static_cast<std::size_t>(tc.buffer_capacity));
  }
  if (ctde) acting.assign(L, learners[0].net);

  double epsilon = tc.epsilon_start;
  std::int64_t global_step = 0;
  try {
    for (int episode = 0; episode < tc.episodes; ++episode) {
      env.reset();
      std::vector<double> step_rates;
      step_rates.reserve(tc.steps_per_episode);

      for (int t = 0; t < tc.steps_per_episode; ++t) {
        const std::int64_t g = global_step++;
        art.ledger.begin_step(g, L);

        std::vector<StateVector> states(L);
        for (int a = 0; a < L; ++a) {
          notify(hooks, Phase::kObserve, g, a);
          states[a] = env.observe(a);
        }

        std::vector<JointAction> actions(L);
        for (int a = 0; a < L; ++a) notify(hooks, Phase::kAct, g, a);
        for_each_agent(L, parallel, [&](int a) {
          const QNetwork& net = ctde ? acting[a] : learners[a].net;
          actions[a] = select_action(net, states[a], epsilon, agent_rngs[a], U);
        });
        for (int a = 0; a < L; ++a) apply_action(env, a, actions[a]);

        env.advance();
        StepPhysics phys = env.measure();

        std::vector<double> rewards(L);
        for (int a = 0; a < L; ++a) {
          rewards[a] = cell_reward(cell_slice(phys.sinr, a, U), cell_slice(phys.inter_estimate, a, U),
                                   nc.gamma_min, nc.interference_threshold_mw, nc.punishment);
          if (!std::isfinite(rewards[a])) {
            throw TrainingFault("non-finite reward for cell " + std::to_string(a) + " at step " +
                                std::to_string(g));
          }
        }
        if (framework == Framework::kCrdu) {
          const double common = crdu_reward(rewards, nc.punishment);
          if (!std::isfinite(common)) throw TrainingFault("non-finite common reward at step " + std::to_string(g));
          for (int a = 0; a < L; ++a) {
            rewards[a] = common;
            art.ledger.add_tx(g, a, 0, 1);
          }
        }

        std::vector<std::vector<Experience>> experiences(L);
        std::vector<std::int64_t> sent(L, 0);
        for (int a = 0; a < L; ++a) {
          notify(hooks, Phase::kStore, g, a);
          StateVector next = env.observe(a);
          for (int u = 0; u < U; ++u) {
            experiences[a].push_back(
                {states[a], actions[a].index, actions[a].commands[u], rewards[a], next, a, u, g});
          }
          ReplayBuffer& own = buffers[ctde ? 0 : a];
          for (const auto& e : experiences[a]) own.insert(e, Origin::kLocal);
          if (ctde) {
            art.ledger.add_tx(g, a, U, U * width);
            sent[a] = U;
          }
        }

        std::vector<SharePacket> packets;
        if (framework == Framework::kSmart || framework == Framework::kShareAll) {
          for (int a = 0; a < L; ++a) {
            notify(hooks, Phase::kShare, g, a);
            std::vector<SharePacket> out;
            if (framework == Framework::kShareAll) {
              out = share_all(a, g, experiences[a], L);
            } else {
              std::vector<double> per_source(static_cast<std::size_t>(U) * L);
              for (int u = 0; u < U; ++u) {
                for (int j = 0; j < L; ++j) per_source[u * L + j] = phys.table.inter_from(a, u, j);
              }
              InterferenceView view{cell_slice(phys.inter_estimate, a, U), per_source};
              out = smart_select(a, g, experiences[a], view, nc.interference_threshold_mw, L,
                                 tc.attribution);
            }
            for (auto& p : out) packets.push_back(std::move(p));
          }
        }
        notify(hooks, Phase::kDeliver, g, -1);
        DeliveryCounts delivered =
            ctde ? DeliveryCounts{std::vector<std::int64_t>(L, 0), std::vector<std::int64_t>(L, 0)}
                 : deliver(std::move(packets), buffers, art.ledger, U);

        std::vector<double> losses(L, std::numeric_limits<double>::quiet_NaN());
        bool ready = true;
        for (const auto& b : buffers) ready = ready && b.size() >= static_cast<std::size_t>(tc.batch_size);
        if (ready) {
          for (int a = 0; a < L; ++a) notify(hooks, Phase::kTrain, g, a);
          if (ctde) {
            for (int k = 0; k < L; ++k) losses[k] = train_learner(learners[0], buffers[0], central_rng, tc);
            art.gradient_steps += L;
          } else {
            for_each_agent(L, parallel, [&](int a) {
              losses[a] = train_learner(learners[a], buffers[a], agent_rngs[a], tc);
            });
            art.gradient_steps += L;
          }
        }
        if (ctde) ctde_sync(learners[0].net, acting, g, tc.ctde_period, art.ledger);

        for (int a = 0; a < L; ++a) {
          check_cell_constraints(env, a);
          StepRecord rec;
          rec.episode = episode;
          rec.step = t;
          rec.agent = a;
          rec.action = actions[a].index;
          rec.reward = rewards[a];
          rec.loss = losses[a];
          rec.epsilon = epsilon;
          rec.shared_tx = ctde ? sent[a] : delivered.sent[a];
          rec.shared_rx = delivered.received[a];
          auto s = cell_slice(phys.sinr, a, U);
          rec.sinr.assign(s.begin(), s.end());
          rec.tx_power_mw = env.cell_power_mw(a);
          auto b = env.cell_beams(a);
          rec.beams.assign(b.begin(), b.end());
          art.metrics.records.push_back(std::move(rec));
        }
        step_rates.push_back(network_sum_rate(phys.sinr));
        notify(hooks, Phase::kAdvance, g, -1);
      }

      art.metrics.episode_sum_rate.push_back(episode_rate(step_rates, tc.sum_rate_mode));
      epsilon = std::max(tc.epsilon_min, epsilon * tc.epsilon_decay);
    }
  } catch (const TrainingFault& fault) {
    art.abort_reason = fault.what();
  }

  if (ctde) {
    art.networks = acting;
  } else {
    for (auto& l : learners) art.networks.push_back(l.net);
  }
  return art;
}

RunArtifacts run_training(RunConfig config, Framework framework, std::uint64_t seed) {
  config.framework = framework;
  config.seed = seed;
  return run_training(config);
}

MetricsLog evaluate(const std::vector<QNetwork>& networks, const RunConfig& config, int episodes,
                    std::uint64_t seed) {
  config.validate();
  const NetworkConfig& nc = config.network;
  const int L = nc.cells;
  const int U = nc.users_per_cell;
  if (static_cast<int>(networks.size()) != L) throw ContractViolation("one network per agent is required");

  MetricsLog log;
  log.cells = L;
  log.users_per_cell = U;
  log.sum_rate_mode = config.training.sum_rate_mode;

  NetworkEnvironment env(nc, make_stream(seed, Stream::kEvaluation));
  Rng unused = make_stream(seed, Stream::kEvaluation, 1);
  for (int episode = 0; episode < episodes; ++episode) {
    env.reset();
    std::vector<double> step_rates;
    for (int t = 0; t < config.training.steps_per_episode; ++t) {
      std::vector<JointAction> actions(L);
      for (int a = 0; a < L; ++a) actions[a] = select_action(networks[a], env.observe(a), 0.0, unused, U);
      for (int a = 0; a < L; ++a) apply_action(env, a, actions[a]);
      env.advance();
      StepPhysics phys = env.measure();
      for (int a = 0; a < L; ++a) {
        check_cell_constraints(env, a);
        StepRecord rec;
        rec.episode = episode;
        rec.step = t;
        rec.agent = a;
        rec.action = actions[a].index;
        rec.reward = cell_reward(cell_slice(phys.sinr, a, U), cell_slice(phys.inter_estimate, a, U),
                                 nc.gamma_min, nc.interference_threshold_mw, nc.punishment);
        auto s = cell_slice(phys.sinr, a, U);
        rec.sinr.assign(s.begin(), s.end());
        rec.tx_power_mw = env.cell_power_mw(a);
        auto b = env.cell_beams(a);
        rec.beams.assign(b.begin(), b.end());
        log.records.push_back(std::move(rec));
      }
      step_rates.push_back(network_sum_rate(phys.sinr));
    }
    log.episode_sum_rate.push_back(episode_rate(step_rates, log.sum_rate_mode));
  }
  return log;
}

}  // namespace smart
