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
#include <random>

namespace smart {

using Rng = std::mt19937_64;

// Well-known stream ids. Agent streams are kAgentStreamBase + agent index so
// that every framework run with the same master seed sees the same
// environment draws and the same initial weights.
enum class Stream : std::uint64_t {
  kEnvironment = 1,
  kEvaluation = 2,
  kOracle = 3,
  kCentral = 4,
  kAgentBase = 1000,
};

inline Rng make_stream(std::uint64_t master_seed, std::uint64_t stream_id) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed & 0xffffffffu),
                    static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(stream_id & 0xffffffffu),
                    static_cast<std::uint32_t>(stream_id >> 32)};
  return Rng(seq);
}

inline Rng make_stream(std::uint64_t master_seed, Stream stream, std::uint64_t offset = 0) {
  return make_stream(master_seed, static_cast<std::uint64_t>(stream) + offset);
}

// Uniform double in [0, 1).
inline double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

}  // namespace smart
