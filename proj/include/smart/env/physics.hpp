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

#include <span>
#include <vector>

#include "smart/env/channel.hpp"
#include "smart/env/codebook.hpp"

namespace smart {

// Per-(cell, UE) received power terms, flat at cell * U + ue. Per-source
// inter-cell terms are flat at (cell * U + ue) * L + source and are zero for
// source == cell.
struct PowerTable {
  int cells = 0;
  int users_per_cell = 0;
  std::vector<double> serving;
  std::vector<double> intra;
  std::vector<double> inter;
  std::vector<double> inter_by_source;

  double inter_from(int cell, int ue, int source) const {
    return inter_by_source[(cell * users_per_cell + ue) * cells + source];
  }
};

// S = P |h^H w|^2 for the serving beam, intra-cell leakage from the serving
// BS's other beams, and inter-cell power from every other BS. Powers in mW
// and beam indices are flat per (cell, UE).
PowerTable received_powers(const ChannelSet& channels, std::span<const double> powers_mw,
                           std::span<const int> beams, const Codebook& codebook);

// gamma = S / (sigma^2 + I_intra + I_inter), linear.
std::vector<double> sinr(const PowerTable& table, double noise_power_mw);

// Inter-cell power a BS infers from its UEs' SINR reports. It recomputes the
// serving and intra-cell terms from its own powers, beams and channels,
// recovers I_total + sigma^2 = S / gamma, and subtracts noise and intra-cell
// power. Results are clamped at zero. Throws MeasurementError on a
// non-positive report.
std::vector<double> measure_inter_cell(std::span<const double> reported_sinr,
                                       std::span<const double> powers_mw,
                                       std::span<const int> beams, const ChannelSet& channels,
                                       double noise_power_mw, const Codebook& codebook);

}  // namespace smart
