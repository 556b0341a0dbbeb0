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


#include "smart/env/channel.hpp"

#include <cmath>

#include "smart/common/errors.hpp"
#include "smart/common/units.hpp"

namespace smart {

namespace {

std::complex<double> complex_gaussian(Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  double re = normal(rng);
  double im = normal(rng);
  return {re, im};
}

}  // namespace

double path_gain(double distance_m, const NetworkConfig& config) {
  const double wavelength = kSpeedOfLight / config.carrier_freq_hz;
  const double reference = std::pow(wavelength / (4.0 * kPi), 2.0);
  const double d = std::max(distance_m, 1.0);
  return reference * std::pow(d, -config.pathloss_exponent);
}

double fading_correlation(const NetworkConfig& config) {
  if (config.static_channels) return 1.0;
  const double doppler = config.ue_speed_mps * config.carrier_freq_hz / kSpeedOfLight;
  return std::cyl_bessel_j(0.0, 2.0 * kPi * doppler * config.step_duration_s);
}

Eigen::VectorXcd array_response(int antennas, double phi) {
  Eigen::VectorXcd a(antennas);
  const double scale = 1.0 / std::sqrt(static_cast<double>(antennas));
  const double step = kPi * std::sin(phi);
  for (int m = 0; m < antennas; ++m) a[m] = std::polar(scale, m * step);
  return a;
}

ChannelSet sample_channels(const CellLayout& layout, const UserSet& users, const ChannelSet* prev,
                           const NetworkConfig& config, Rng& rng) {
  const int L = layout.cells();
  const int U = users.users_per_cell;
  const int M = config.antennas;
  const int paths = config.paths;
  if (users.cells != L) throw ContractViolation("user set and layout disagree on cell count");
  if (prev != nullptr &&
      (prev->cells != L || prev->users_per_cell != U || prev->antennas != M)) {
    throw ContractViolation("previous channel set has a different shape");
  }

  const double rho = fading_correlation(config);
  const double innovation = std::sqrt(std::max(0.0, 1.0 - rho * rho));
  std::uniform_real_distribution<double> spread(-config.angular_spread_rad,
                                                config.angular_spread_rad);

  ChannelSet set;
  set.cells = L;
  set.users_per_cell = U;
  set.antennas = M;
  set.links.resize(static_cast<std::size_t>(L) * L * U);

  for (int l = 0; l < L; ++l) {
    for (int j = 0; j < L; ++j) {
      for (int u = 0; u < U; ++u) {
        LinkChannel& link = set.links[set.index(l, j, u)];
        if (prev != nullptr) {
          const LinkChannel& old = prev->link(l, j, u);
          link.angle_offsets = old.angle_offsets;
          link.gains = old.gains;
          if (rho != 1.0) {
            for (auto& g : link.gains) g = rho * g + innovation * complex_gaussian(rng);
          }
        } else {
          link.gains.resize(paths);
          link.angle_offsets.resize(paths);
          for (int p = 0; p < paths; ++p) {
            link.gains[p] = complex_gaussian(rng);
            link.angle_offsets[p] = spread(rng);
          }
        }

        Point rel = users.at(l, u).position - layout.bs_positions[j];
        link.distance_m = rel.norm();
        // Array axis along y, broadside along +x.
        const double bearing = std::atan2(rel.y, rel.x);
        const double amplitude =
            std::sqrt(M * path_gain(link.distance_m, config) / static_cast<double>(paths));
        link.h = Eigen::VectorXcd::Zero(M);
        for (int p = 0; p < paths; ++p) {
          link.h += link.gains[p] * array_response(M, bearing + link.angle_offsets[p]);
        }
        link.h *= amplitude;
      }
    }
  }
  return set;
}

}  // namespace smart
