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
#include <optional>
#include <vector>

#include "smart/common/random.hpp"
#include "smart/rl/agent_io.hpp"

namespace smart {

enum class Origin { kLocal, kReceived };

// Bounded FIFO of experiences; the oldest entry is evicted first.
class ReplayBuffer {
 public:
  explicit ReplayBuffer(std::size_t capacity);

  void insert(Experience experience, Origin origin = Origin::kLocal);

  // B distinct entries drawn uniformly. std::nullopt while the buffer holds
  // fewer than B entries.
  std::optional<std::vector<const Experience*>> sample(std::size_t batch_size, Rng& rng) const;

  std::size_t size() const { return size_; }
  std::size_t capacity() const { return slots_.size(); }
  bool empty() const { return size_ == 0; }
  // i = 0 is the oldest entry.
  const Experience& at(std::size_t i) const;

  std::int64_t local_inserted() const { return local_inserted_; }
  std::int64_t received_inserted() const { return received_inserted_; }

 private:
  std::vector<Experience> slots_;
  std::size_t head_ = 0;  // position of the oldest entry
  std::size_t size_ = 0;
  std::int64_t local_inserted_ = 0;
  std::int64_t received_inserted_ = 0;
};

}  // namespace smart
