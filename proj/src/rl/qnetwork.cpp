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


#include "smart/rl/qnetwork.hpp"

#include <cmath>
#include <string>

#include "smart/common/errors.hpp"

namespace smart {

namespace {

template <typename Fn>
void for_each_block(QParameters& p, Fn&& fn) {
  fn(p.w1.data(), p.w1.size());
  fn(p.b1.data(), p.b1.size());
  fn(p.w2.data(), p.w2.size());
  fn(p.b2.data(), p.b2.size());
  fn(p.w3.data(), p.w3.size());
  fn(p.b3.data(), p.b3.size());
}

template <typename Fn>
void for_each_block(const QParameters& p, Fn&& fn) {
  fn(p.w1.data(), p.w1.size());
  fn(p.b1.data(), p.b1.size());
  fn(p.w2.data(), p.w2.size());
  fn(p.b2.data(), p.b2.size());
  fn(p.w3.data(), p.w3.size());
  fn(p.b3.data(), p.b3.size());
}

Eigen::MatrixXd relu(const Eigen::MatrixXd& z) { return z.cwiseMax(0.0); }

Eigen::MatrixXd relu_mask(const Eigen::MatrixXd& z) {
  return (z.array() > 0.0).cast<double>().matrix();
}

}  // namespace

std::int64_t QParameters::count() const {
  return w1.size() + b1.size() + w2.size() + b2.size() + w3.size() + b3.size();
}

double QParameters::squared_norm() const {
  return w1.squaredNorm() + b1.squaredNorm() + w2.squaredNorm() + b2.squaredNorm() +
         w3.squaredNorm() + b3.squaredNorm();
}

bool QParameters::all_finite() const {
  return w1.allFinite() && b1.allFinite() && w2.allFinite() && b2.allFinite() &&
         w3.allFinite() && b3.allFinite();
}

QParameters& QParameters::operator*=(double s) {
  w1 *= s;
  b1 *= s;
  w2 *= s;
  b2 *= s;
  w3 *= s;
  b3 *= s;
  return *this;
}

QParameters& QParameters::operator-=(const QParameters& other) {
  w1 -= other.w1;
  b1 -= other.b1;
  w2 -= other.w2;
  b2 -= other.b2;
  w3 -= other.w3;
  b3 -= other.b3;
  return *this;
}

std::vector<double> QParameters::flatten() const {
  std::vector<double> flat;
  flat.reserve(count());
  for_each_block(*this, [&](const double* data, Eigen::Index n) { flat.insert(flat.end(), data, data + n); });
  return flat;
}

void QParameters::assign(std::span<const double> flat) {
  if (static_cast<std::int64_t>(flat.size()) != count()) {
    throw ContractViolation("flat parameter vector has the wrong length");
  }
  std::size_t offset = 0;
  for_each_block(*this, [&](double* data, Eigen::Index n) {
    std::copy_n(flat.begin() + offset, n, data);
    offset += n;
  });
}

double& QParameters::at(std::int64_t flat_index) {
  if (flat_index < 0 || flat_index >= count()) throw ContractViolation("parameter index out of range");
  double* found = nullptr;
  std::int64_t remaining = flat_index;
  for_each_block(*this, [&](double* data, Eigen::Index n) {
    if (found == nullptr && remaining < n) found = data + remaining;
    if (found == nullptr) remaining -= n;
  });
  return *found;
}

bool operator==(const QParameters& a, const QParameters& b) {
  auto same = [](const auto& x, const auto& y) {
    return x.rows() == y.rows() && x.cols() == y.cols() && (x.size() == 0 || x == y);
  };
  return same(a.w1, b.w1) && same(a.b1, b.b1) && same(a.w2, b.w2) && same(a.b2, b.b2) &&
         same(a.w3, b.w3) && same(a.b3, b.b3);
}

QNetwork::QNetwork(int inputs, int hidden1, int hidden2, int outputs) {
  if (inputs < 1 || hidden1 < 1 || hidden2 < 1 || outputs < 1) {
    throw ContractViolation("layer sizes must be positive");
  }
  params_.w1 = Eigen::MatrixXd::Zero(hidden1, inputs);
  params_.b1 = Eigen::VectorXd::Zero(hidden1);
  params_.w2 = Eigen::MatrixXd::Zero(hidden2, hidden1);
  params_.b2 = Eigen::VectorXd::Zero(hidden2);
  params_.w3 = Eigen::MatrixXd::Zero(outputs, hidden2);
  params_.b3 = Eigen::VectorXd::Zero(outputs);
}

void QNetwork::initialize(Rng& rng) {
  auto fill = [&rng](Eigen::MatrixXd& w, Eigen::VectorXd& b) {
    const double bound = 1.0 / std::sqrt(static_cast<double>(w.cols()));
    std::uniform_real_distribution<double> dist(-bound, bound);
    for (Eigen::Index i = 0; i < w.size(); ++i) w.data()[i] = dist(rng);
    for (Eigen::Index i = 0; i < b.size(); ++i) b[i] = dist(rng);
  };
  fill(params_.w1, params_.b1);
  fill(params_.w2, params_.b2);
  fill(params_.w3, params_.b3);
}

Eigen::VectorXd QNetwork::forward(std::span<const double> state) const {
  if (static_cast<int>(state.size()) != inputs()) {
    throw ContractViolation("state has length " + std::to_string(state.size()) +
                            ", network expects " + std::to_string(inputs()));
  }
  Eigen::Map<const Eigen::VectorXd> x(state.data(), static_cast<Eigen::Index>(state.size()));
  Eigen::VectorXd h1 = (params_.w1 * x + params_.b1).cwiseMax(0.0);
  Eigen::VectorXd h2 = (params_.w2 * h1 + params_.b2).cwiseMax(0.0);
  return params_.w3 * h2 + params_.b3;
}

Eigen::MatrixXd QNetwork::forward_batch(const Eigen::MatrixXd& states) const {
  if (states.rows() != inputs()) throw ContractViolation("batch rows must equal network inputs");
  Eigen::MatrixXd h1 = relu((params_.w1 * states).colwise() + params_.b1);
  Eigen::MatrixXd h2 = relu((params_.w2 * h1).colwise() + params_.b2);
  return (params_.w3 * h2).colwise() + params_.b3;
}

LossGradient loss_and_gradient(const QNetwork& net, const QNetwork& target,
                               std::span<const Experience* const> batch, double discount,
                               double reward_scale) {
  if (batch.empty()) throw ContractViolation("minibatch must not be empty");
  if (target.inputs() != net.inputs() || target.outputs() != net.outputs()) {
    throw ContractViolation("target network architecture differs from the online network");
  }
  const int n_in = net.inputs();
  const auto B = static_cast<Eigen::Index>(batch.size());

  Eigen::MatrixXd states(n_in, B);
  Eigen::MatrixXd next_states(n_in, B);
  for (Eigen::Index b = 0; b < B; ++b) {
    const Experience& e = *batch[b];
    if (static_cast<int>(e.state.size()) != n_in || static_cast<int>(e.next_state.size()) != n_in) {
      throw ContractViolation("experience state length does not match the network");
    }
    if (e.action < 0 || e.action >= net.outputs()) throw ContractViolation("experience action out of range");
    states.col(b) = Eigen::Map<const Eigen::VectorXd>(e.state.data(), n_in);
    next_states.col(b) = Eigen::Map<const Eigen::VectorXd>(e.next_state.data(), n_in);
  }

  const QParameters& p = net.parameters();
  Eigen::MatrixXd z1 = (p.w1 * states).colwise() + p.b1;
  Eigen::MatrixXd h1 = relu(z1);
  Eigen::MatrixXd z2 = (p.w2 * h1).colwise() + p.b2;
  Eigen::MatrixXd h2 = relu(z2);
  Eigen::MatrixXd q = (p.w3 * h2).colwise() + p.b3;

  Eigen::RowVectorXd bootstrap = target.forward_batch(next_states).colwise().maxCoeff();

  Eigen::MatrixXd dq = Eigen::MatrixXd::Zero(q.rows(), B);
  double loss = 0.0;
  for (Eigen::Index b = 0; b < B; ++b) {
    const Experience& e = *batch[b];
    double y = reward_scale * e.reward + discount * bootstrap[b];
    double diff = q(e.action, b) - y;
    loss += diff * diff;
    dq(e.action, b) = 2.0 * diff / static_cast<double>(B);
  }
  loss /= static_cast<double>(B);

  LossGradient out;
  out.loss = loss;
  QParameters& g = out.gradient;
  g.w3 = dq * h2.transpose();
  g.b3 = dq.rowwise().sum();
  Eigen::MatrixXd dz2 = (p.w3.transpose() * dq).cwiseProduct(relu_mask(z2));
  g.w2 = dz2 * h1.transpose();
  g.b2 = dz2.rowwise().sum();
  Eigen::MatrixXd dz1 = (p.w2.transpose() * dz2).cwiseProduct(relu_mask(z1));
  g.w1 = dz1 * states.transpose();
  g.b1 = dz1.rowwise().sum();
  return out;
}

double train_step(QNetwork& net, const QNetwork& target, std::span<const Experience* const> batch,
                  const TrainOptions& options) {
  LossGradient lg = loss_and_gradient(net, target, batch, options.discount, options.reward_scale);
  if (!std::isfinite(lg.loss) || !lg.gradient.all_finite()) {
    throw TrainingFault("non-finite training loss (" + std::to_string(lg.loss) + ")");
  }
  if (options.grad_clip_norm > 0.0) {
    const double norm = std::sqrt(lg.gradient.squared_norm());
    if (norm > options.grad_clip_norm) lg.gradient *= options.grad_clip_norm / norm;
  }
  if (options.learning_rate != 0.0) {
    lg.gradient *= options.learning_rate;
    net.parameters() -= lg.gradient;
  }
  return lg.loss;
}

int argmax(const Eigen::VectorXd& values) {
  if (values.size() == 0) throw ContractViolation("argmax of an empty vector");
  int best = 0;
  for (Eigen::Index i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = static_cast<int>(i);
  }
  return best;
}

JointAction select_action(const QNetwork& net, std::span<const double> state, double epsilon,
                          Rng& rng, int users_per_cell) {
  if (epsilon < 0.0 || epsilon > 1.0) throw ContractViolation("epsilon must be in [0, 1]");
  JointAction action;
  if (epsilon > 0.0 && uniform01(rng) < epsilon) {
    std::uniform_int_distribution<int> pick(0, net.outputs() - 1);
    action.index = pick(rng);
  } else {
    action.index = argmax(net.forward(state));
  }
  action.commands = decode_action(action.index, users_per_cell);
  return action;
}

}  // namespace smart
