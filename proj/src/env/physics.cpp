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


#include "smart/env/physics.hpp"

#include <cmath>
#include <string>

#include "smart/common/errors.hpp"

namespace smart {

namespace {

double beam_power(const Eigen::VectorXcd& h, const Eigen::VectorXcd& w) {
  return std::norm(h.dot(w));
}

void check_inputs(const ChannelSet& channels, std::span<const double> powers_mw,
                  std::span<const int> beams, const Codebook& codebook) {
  const std::size_t n = static_cast<std::size_t>(channels.cells) * channels.users_per_cell;
  if (powers_mw.size() != n || beams.size() != n) {
    throw ContractViolation("power/beam vectors must hold one entry per (cell, UE)");
  }
  if (codebook.antennas != channels.antennas) {
    throw ContractViolation("codebook and channel antenna counts differ");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (beams[i] < 0 || beams[i] >= codebook.size()) {
      throw ContractViolation("beam index " + std::to_string(beams[i]) + " out of range");
    }
    if (!(powers_mw[i] >= 0.0)) throw ContractViolation("transmit powers must be >= 0");
  }
}

}  // namespace

PowerTable received_powers(const ChannelSet& channels, std::span<const double> powers_mw,
                           std::span<const int> beams, const Codebook& codebook) {
  check_inputs(channels, powers_mw, beams, codebook);
  const int L = channels.cells;
  const int U = channels.users_per_cell;

  PowerTable table;
  table.cells = L;
  table.users_per_cell = U;
  table.serving.assign(L * U, 0.0);
  table.intra.assign(L * U, 0.0);
  table.inter.assign(L * U, 0.0);
  table.inter_by_source.assign(L * U * L, 0.0);

  for (int l = 0; l < L; ++l) {
    for (int u = 0; u < U; ++u) {
      const int row = l * U + u;
      const Eigen::VectorXcd& own = channels.h(l, l, u);
      for (int k = 0; k < U; ++k) {
        double p = powers_mw[l * U + k] * beam_power(own, codebook[beams[l * U + k]]);
        if (k == u) {
          table.serving[row] = p;
        } else {
          table.intra[row] += p;
        }
      }
      double aggregate = 0.0;
      for (int j = 0; j < L; ++j) {
        if (j == l) continue;
        const Eigen::VectorXcd& cross = channels.h(l, j, u);
        double from_j = 0.0;
        for (int k = 0; k < U; ++k) {
          from_j += powers_mw[j * U + k] * beam_power(cross, codebook[beams[j * U + k]]);
        }
        table.inter_by_source[row * L + j] = from_j;
        aggregate += from_j;
      }
      table.inter[row] = aggregate;
    }
  }
  return table;
}

std::vector<double> sinr(const PowerTable& table, double noise_power_mw) {
  if (!(noise_power_mw > 0.0)) throw ContractViolation("noise power must be > 0");
  std::vector<double> out(table.serving.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = table.serving[i] / (noise_power_mw + table.intra[i] + table.inter[i]);
  }
  return out;
}

std::vector<double> measure_inter_cell(std::span<const double> reported_sinr,
                                       std::span<const double> powers_mw,
                                       std::span<const int> beams, const ChannelSet& channels,
                                       double noise_power_mw, const Codebook& codebook) {
  check_inputs(channels, powers_mw, beams, codebook);
  const int L = channels.cells;
  const int U = channels.users_per_cell;
  if (reported_sinr.size() != static_cast<std::size_t>(L) * U) {
    throw ContractViolation("one SINR report per (cell, UE) is required");
  }

  std::vector<double> estimate(L * U, 0.0);
  for (int l = 0; l < L; ++l) {
    for (int u = 0; u < U; ++u) {
      const int row = l * U + u;
      const double gamma = reported_sinr[row];
      if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw MeasurementError("SINR report for cell " + std::to_string(l) + " UE " +
                               std::to_string(u) + " is not a positive finite value");
      }
      const Eigen::VectorXcd& own = channels.h(l, l, u);
      const double serving = powers_mw[row] * beam_power(own, codebook[beams[row]]);
      double intra = 0.0;
      for (int k = 0; k < U; ++k) {
        if (k != u) intra += powers_mw[l * U + k] * beam_power(own, codebook[beams[l * U + k]]);
      }
      const double total_plus_noise = serving / gamma;
      estimate[row] = std::max(0.0, total_plus_noise - noise_power_mw - intra);
    }
  }
  return estimate;
}

}  // namespace smart
