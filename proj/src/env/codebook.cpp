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


#include "smart/env/codebook.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "smart/common/errors.hpp"
#include "smart/common/units.hpp"

namespace smart {

const Eigen::VectorXcd& Codebook::operator[](int index) const {
  if (index < 0 || index >= size()) {
    throw ContractViolation("beam index " + std::to_string(index) + " outside codebook of size " +
                            std::to_string(size()));
  }
  return vectors[index];
}

Codebook beam_codebook(int antennas, int phase_bits) {
  if (antennas < 1) throw ContractViolation("codebook needs at least one antenna");
  if (phase_bits < 1 || phase_bits > 16) throw ContractViolation("phase_bits must be in [1, 16]");

  Codebook book;
  book.antennas = antennas;
  const int count = 1 << phase_bits;
  const double scale = 1.0 / std::sqrt(static_cast<double>(antennas));
  for (int n = 0; n < count; ++n) {
    double theta = n * kPi / (count - 1);
    Eigen::VectorXcd w(antennas);
    for (int m = 0; m < antennas; ++m) w[m] = std::polar(scale, m * theta);
    book.phases.push_back(theta);
    book.vectors.push_back(std::move(w));
  }
  return book;
}

}  // namespace smart
