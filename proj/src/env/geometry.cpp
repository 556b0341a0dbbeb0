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


#include "smart/env/geometry.hpp"

#include <algorithm>
#include <tuple>

#include "smart/common/errors.hpp"
#include "smart/common/units.hpp"

namespace smart {

namespace {

constexpr double kHeadingJitterRad = 0.05;

int hex_ring(int q, int r) { return std::max({std::abs(q), std::abs(r), std::abs(q + r)}); }

}  // namespace

int CellLayout::cell_of(Point p) const {
  int best = 0;
  double best_d = distance(p, bs_positions.at(0));
  for (int c = 1; c < cells(); ++c) {
    double d = distance(p, bs_positions[c]);
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  return best;
}

CellLayout build_layout(const NetworkConfig& config) {
  config.validate();
  const double isd = config.inter_site_distance_m;

  int rings = 0;
  while (1 + 3 * rings * (rings + 1) < config.cells) ++rings;

  // Axial hex coordinates; sort by ring, then by angle in [0, 2pi) so that
  // consecutive sites within a ring are neighbours.
  struct Site {
    int ring;
    double angle;
    Point p;
  };
  std::vector<Site> sites;
  for (int q = -rings; q <= rings; ++q) {
    for (int r = -rings; r <= rings; ++r) {
      int ring = hex_ring(q, r);
      if (ring > rings) continue;
      Point p{isd * (q + 0.5 * r), isd * (std::sqrt(3.0) / 2.0 * r)};
      double angle = ring == 0 ? 0.0 : std::atan2(p.y, p.x);
      if (angle < -1e-12) angle += 2.0 * kPi;
      sites.push_back({ring, std::max(angle, 0.0), p});
    }
  }
  std::sort(sites.begin(), sites.end(), [](const Site& a, const Site& b) {
    return std::tie(a.ring, a.angle) < std::tie(b.ring, b.angle);
  });

  CellLayout layout;
  layout.inter_site_distance_m = isd;
  for (int c = 0; c < config.cells; ++c) layout.bs_positions.push_back(sites[c].p);
  return layout;
}

UserSet spawn_users(const CellLayout& layout, const NetworkConfig& config, Rng& rng) {
  UserSet set;
  set.cells = layout.cells();
  set.users_per_cell = config.users_per_cell;
  set.users.reserve(static_cast<std::size_t>(set.cells) * set.users_per_cell);
  for (int c = 0; c < set.cells; ++c) {
    for (int u = 0; u < set.users_per_cell; ++u) {
      double radius = config.cell_radius_m * std::sqrt(uniform01(rng));
      double angle = 2.0 * kPi * uniform01(rng);
      double heading = 2.0 * kPi * uniform01(rng);
      Point offset{radius * std::cos(angle), radius * std::sin(angle)};
      set.users.push_back({layout.bs_positions[c] + offset, c, heading});
    }
  }
  return set;
}

UserSet step_mobility(const UserSet& users, const CellLayout& layout, const NetworkConfig& config,
                      Rng& rng) {
  UserSet next = users;
  const double step = config.ue_speed_mps * config.step_duration_s;
  if (step == 0.0) return next;
  const double radius = config.cell_radius_m;
  std::normal_distribution<double> jitter(0.0, kHeadingJitterRad);

  for (auto& user : next.users) {
    user.heading_rad += jitter(rng);
    Point center = layout.bs_positions.at(user.serving_cell);
    Point rel = user.position - center;
    Point moved = rel + step * Point{std::cos(user.heading_rad), std::sin(user.heading_rad)};
    double d = moved.norm();
    if (d > radius) {
      // Mirror radially across the boundary circle and reflect the heading
      // about the tangent at the exit point.
      Point n = (1.0 / d) * moved;
      double inward = std::max(2.0 * radius - d, 0.0);
      moved = inward * n;
      double vx = std::cos(user.heading_rad);
      double vy = std::sin(user.heading_rad);
      double dot = vx * n.x + vy * n.y;
      user.heading_rad = std::atan2(vy - 2.0 * dot * n.y, vx - 2.0 * dot * n.x);
    }
    user.position = center + moved;
  }
  return next;
}

std::vector<Point> relative_positions(const UserSet& users, const CellLayout& layout, int cell) {
  if (cell < 0 || cell >= users.cells) throw ContractViolation("cell index out of range");
  std::vector<Point> out;
  out.reserve(users.users_per_cell);
  for (int u = 0; u < users.users_per_cell; ++u) {
    out.push_back(users.at(cell, u).position - layout.bs_positions[cell]);
  }
  return out;
}

}  // namespace smart
