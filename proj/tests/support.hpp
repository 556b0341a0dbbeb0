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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "smart/common/random.hpp"
#include "smart/env/channel.hpp"
#include "smart/env/codebook.hpp"
#include "smart/env/config.hpp"
#include "smart/env/geometry.hpp"
#include "smart/rl/agent_io.hpp"
#include "smart/rl/qnetwork.hpp"

namespace smart::test {

inline double relative_error(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

// A random physical snapshot: layout, users, channels, powers, beams.
struct Snapshot {
  NetworkConfig config;
  CellLayout layout;
  UserSet users;
  ChannelSet channels;
  Codebook codebook;
  std::vector<double> powers_mw;
  std::vector<int> beams;
};

inline Snapshot random_snapshot(const NetworkConfig& config, Rng& rng) {
  Snapshot s;
  s.config = config;
  s.layout = build_layout(config);
  s.users = spawn_users(s.layout, config, rng);
  s.channels = sample_channels(s.layout, s.users, nullptr, config, rng);
  s.codebook = beam_codebook(config.antennas, config.phase_bits);
  std::uniform_real_distribution<double> dbm(config.min_ue_power_dbm(),
                                             config.initial_ue_power_dbm());
  std::uniform_int_distribution<int> beam(0, s.codebook.size() - 1);
  for (int i = 0; i < config.total_users(); ++i) {
    s.powers_mw.push_back(std::pow(10.0, dbm(rng) / 10.0));
    s.beams.push_back(beam(rng));
  }
  return s;
}

// Hand-rolled |h^H w|^2 without Eigen's dot, for oracle sums.
inline double beam_gain(const Eigen::VectorXcd& h, const Eigen::VectorXcd& w) {
  std::complex<double> acc = 0.0;
  for (int m = 0; m < h.size(); ++m) acc += std::conj(h[m]) * w[m];
  return std::norm(acc);
}

inline Experience make_experience(int cell, int ue, std::int64_t step, double reward, int users = 3) {
  Experience e;
  e.state.assign(4 * users, 0.1 * (cell + 1));
  e.next_state.assign(4 * users, 0.2 * (ue + 1));
  e.action = ue;
  e.reward = reward;
  e.cell = cell;
  e.ue = ue;
  e.step = step;
  return e;
}

// Mean squared TD error recomputed one experience at a time from forward().
inline double reference_loss(const QNetwork& net, const QNetwork& target,
                             const std::vector<const Experience*>& batch, double discount) {
  double total = 0.0;
  for (const Experience* e : batch) {
    const double y = e->reward + discount * target.forward(e->next_state).maxCoeff();
    const double d = y - net.forward(e->state)[e->action];
    total += d * d;
  }
  return total / static_cast<double>(batch.size());
}

// Smallest |pre-activation| over both hidden layers and all batch states.
inline double min_abs_preactivation(const QNetwork& net, const std::vector<const Experience*>& batch) {
  const QParameters& p = net.parameters();
  double smallest = 1e300;
  for (const Experience* e : batch) {
    Eigen::Map<const Eigen::VectorXd> x(e->state.data(), static_cast<Eigen::Index>(e->state.size()));
    Eigen::VectorXd z1 = p.w1 * x + p.b1;
    Eigen::VectorXd z2 = p.w2 * z1.cwiseMax(0.0) + p.b2;
    smallest = std::min({smallest, z1.cwiseAbs().minCoeff(), z2.cwiseAbs().minCoeff()});
  }
  return smallest;
}

struct GradientCheck {
  double worst_relative_error = 0.0;
  std::int64_t parameters = 0;
  int rejected_draws = 0;
};

// Draws a random small network and minibatch, redrawing while any ReLU sits
// within 1e-3 of its kink, and compares the analytic gradient with central
// differences (step 1e-5) of reference_loss on every parameter.
inline GradientCheck random_gradient_check(Rng& rng) {
  std::uniform_int_distribution<int> width(3, 8);
  std::uniform_int_distribution<int> users(1, 2);
  std::uniform_int_distribution<int> batch_size(1, 4);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  GradientCheck out;
  for (;;) {
    const int U = users(rng);
    const int inputs = 4 * U;
    const int outputs = 1 << (2 * U);
    QNetwork net(inputs, width(rng), width(rng), outputs);
    QNetwork target(inputs, net.parameters().w1.rows(), net.parameters().w2.rows(), outputs);
    net.initialize(rng);
    target.initialize(rng);
    std::vector<Experience> storage(batch_size(rng));
    std::uniform_int_distribution<int> action(0, outputs - 1);
    for (Experience& e : storage) {
      e.state.resize(inputs);
      e.next_state.resize(inputs);
      for (double& v : e.state) v = unit(rng);
      for (double& v : e.next_state) v = unit(rng);
      e.action = action(rng);
      e.reward = 2.0 * unit(rng);
    }
    std::vector<const Experience*> batch;
    for (const Experience& e : storage) batch.push_back(&e);
    if (min_abs_preactivation(net, batch) < 1e-3) {
      ++out.rejected_draws;
      continue;
    }
    const double discount = 0.9;
    std::vector<double> analytic = loss_and_gradient(net, target, batch, discount).gradient.flatten();
    const double h = 1e-5;
    for (std::int64_t i = 0; i < net.parameter_count(); ++i) {
      double& theta = net.parameters().at(i);
      const double saved = theta;
      theta = saved + h;
      const double up = reference_loss(net, target, batch, discount);
      theta = saved - h;
      const double down = reference_loss(net, target, batch, discount);
      theta = saved;
      const double numeric = (up - down) / (2.0 * h);
      const double scale = std::max({std::abs(numeric), std::abs(analytic[i]), 1e-6});
      out.worst_relative_error = std::max(out.worst_relative_error, std::abs(numeric - analytic[i]) / scale);
    }
    out.parameters = net.parameter_count();
    return out;
  }
}

}  // namespace smart::test
