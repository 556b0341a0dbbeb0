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


#include "smart/rl/replay_buffer.hpp"

#include <algorithm>

#include "smart/common/errors.hpp"

namespace smart {

ReplayBuffer::ReplayBuffer(std::size_t capacity) : slots_(capacity) {
  if (capacity == 0) throw ContractViolation("replay buffer capacity must be positive");
}

void ReplayBuffer::insert(Experience experience, Origin origin) {
  const std::size_t cap = slots_.size();
  if (size_ < cap) {
    slots_[(head_ + size_) % cap] = std::move(experience);
    ++size_;
  } else {
    slots_[head_] = std::move(experience);
    head_ = (head_ + 1) % cap;
  }
  if (origin == Origin::kLocal) {
    ++local_inserted_;
  } else {
    ++received_inserted_;
  }
}

const Experience& ReplayBuffer::at(std::size_t i) const {
  if (i >= size_) throw ContractViolation("replay buffer index out of range");
  return slots_[(head_ + i) % slots_.size()];
}

std::optional<std::vector<const Experience*>> ReplayBuffer::sample(std::size_t batch_size,
                                                                  Rng& rng) const {
  if (batch_size == 0) throw ContractViolation("batch size must be positive");
  if (size_ < batch_size) return std::nullopt;

  // Floyd's algorithm: batch_size distinct indices in O(batch_size) draws.
  std::vector<std::size_t> chosen;
  chosen.reserve(batch_size);
  for (std::size_t j = size_ - batch_size; j < size_; ++j) {
    std::size_t t = std::uniform_int_distribution<std::size_t>(0, j)(rng);
    if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) {
      chosen.push_back(t);
    } else {
      chosen.push_back(j);
    }
  }
  std::vector<const Experience*> batch;
  batch.reserve(batch_size);
  for (std::size_t i : chosen) batch.push_back(&at(i));
  return batch;
}

}  // namespace smart
