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

#include <Eigen/Dense>

#include "smart/common/random.hpp"
#include "smart/rl/agent_io.hpp"

namespace smart {

// Weights and biases of the input -> h1 -> h2 -> output MLP. Also used as the
// gradient type.
struct QParameters {
  Eigen::MatrixXd w1, w2, w3;
  Eigen::VectorXd b1, b2, b3;

  std::int64_t count() const;
  double squared_norm() const;
  bool all_finite() const;
  QParameters& operator*=(double s);
  QParameters& operator-=(const QParameters& other);

  // Flat view in the order w1, b1, w2, b2, w3, b3 (column-major matrices).
  std::vector<double> flatten() const;
  void assign(std::span<const double> flat);
  double& at(std::int64_t flat_index);

  friend bool operator==(const QParameters& a, const QParameters& b);
};

// Q-values for every joint action of one agent. ReLU hidden layers, identity
// output.
class QNetwork {
 public:
  QNetwork() = default;
  // All parameters zero.
  QNetwork(int inputs, int hidden1, int hidden2, int outputs);

  // Fan-in scaled uniform: every weight and bias of a layer with fan-in n is
  // drawn from U(-1/sqrt(n), 1/sqrt(n)).
  void initialize(Rng& rng);

  int inputs() const { return static_cast<int>(params_.w1.cols()); }
  int outputs() const { return static_cast<int>(params_.w3.rows()); }
  std::int64_t parameter_count() const { return params_.count(); }

  Eigen::VectorXd forward(std::span<const double> state) const;
  // States as columns; returns outputs x batch.
  Eigen::MatrixXd forward_batch(const Eigen::MatrixXd& states) const;

  const QParameters& parameters() const { return params_; }
  QParameters& parameters() { return params_; }

  friend bool operator==(const QNetwork& a, const QNetwork& b) { return a.params_ == b.params_; }

 private:
  QParameters params_;
};

struct LossGradient {
  double loss = 0.0;
  QParameters gradient;
};

// Mean squared TD error over the batch with targets
//   y_b = reward_scale * r_b + discount * max_a' target(s'_b, a'),
// and its gradient with respect to `net` (target held fixed).
LossGradient loss_and_gradient(const QNetwork& net, const QNetwork& target,
                               std::span<const Experience* const> batch, double discount,
                               double reward_scale = 1.0);

struct TrainOptions {
  double discount = 0.995;
  double learning_rate = 0.01;
  double reward_scale = 1.0;
  double grad_clip_norm = 0.0;
};

// One gradient-descent step theta <- theta - eta * grad. Returns the loss
// before the update; throws TrainingFault if that loss is not finite.
double train_step(QNetwork& net, const QNetwork& target, std::span<const Experience* const> batch,
                  const TrainOptions& options);

// Epsilon-greedy over joint actions; greedy ties go to the lowest index.
JointAction select_action(const QNetwork& net, std::span<const double> state, double epsilon,
                          Rng& rng, int users_per_cell);

// Index of the largest entry, lowest index on ties.
int argmax(const Eigen::VectorXd& values);

}  // namespace smart
