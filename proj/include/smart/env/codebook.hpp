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

#include <vector>

#include <Eigen/Dense>

namespace smart {

// 2^r progressive phase-shift steering vectors, w_m = exp(i m theta_n) / sqrt(M)
// with theta_n = n pi / (2^r - 1). Index order follows theta_n, so index +/- 1
// moves to the adjacent beam.
struct Codebook {
  int antennas = 0;
  std::vector<double> phases;
  std::vector<Eigen::VectorXcd> vectors;

  int size() const { return static_cast<int>(vectors.size()); }
  const Eigen::VectorXcd& operator[](int index) const;
};

Codebook beam_codebook(int antennas, int phase_bits);

}  // namespace smart
