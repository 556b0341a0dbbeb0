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

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "smart/common/random.hpp"
#include "smart/env/config.hpp"
#include "smart/env/geometry.hpp"

namespace smart {

// One BS -> UE link. The per-path gains and angular offsets persist across
// steps so fading can evolve with temporal correlation.
struct LinkChannel {
  Eigen::VectorXcd h;
  std::vector<std::complex<double>> gains;
  std::vector<double> angle_offsets;
  double distance_m = 0.0;
};

// h[l][j][u]: channel from BS j to user u served by cell l, stored flat at
// (l * L + j) * U + u.
struct ChannelSet {
  int cells = 0;
  int users_per_cell = 0;
  int antennas = 0;
  std::vector<LinkChannel> links;

  int index(int serving, int source, int ue) const {
    return (serving * cells + source) * users_per_cell + ue;
  }
  const Eigen::VectorXcd& h(int serving, int source, int ue) const {
    return links[index(serving, source, ue)].h;
  }
  const LinkChannel& link(int serving, int source, int ue) const {
    return links[index(serving, source, ue)];
  }
};

// Large-scale power gain: free-space loss at 1 m then 10 n log10(d) beyond;
// distances below 1 m are clamped to 1 m.
double path_gain(double distance_m, const NetworkConfig& config);

// AR(1) coefficient of the per-path gains between consecutive steps,
// J0(2 pi f_D T_s). Equals 1 for static channels or zero speed.
double fading_correlation(const NetworkConfig& config);

// Half-wavelength ULA response toward angle phi from broadside,
// a_m = exp(i pi m sin phi) / sqrt(M).
Eigen::VectorXcd array_response(int antennas, double phi);

// Geometric channel h = sqrt(M PL(d) / N_p) sum_p g_p a(phi_p) with Rayleigh
// path gains g_p ~ CN(0, 1). With `prev`, gains evolve as
// g <- rho g + sqrt(1 - rho^2) n, which keeps the CN(0, 1) marginal.
ChannelSet sample_channels(const CellLayout& layout, const UserSet& users, const ChannelSet* prev,
                           const NetworkConfig& config, Rng& rng);

}  // namespace smart
