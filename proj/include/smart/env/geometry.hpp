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

#include <cmath>
#include <span>
#include <vector>

#include "smart/common/random.hpp"
#include "smart/env/config.hpp"

namespace smart {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point a, Point b) = default;
  double norm() const { return std::hypot(x, y); }
};

inline double distance(Point a, Point b) { return (a - b).norm(); }

// Base-station sites on a hexagonal grid, ring by ring around the origin.
struct CellLayout {
  std::vector<Point> bs_positions;
  double inter_site_distance_m = 0.0;

  int cells() const { return static_cast<int>(bs_positions.size()); }
  // Index of the nearest site (lowest index on ties).
  int cell_of(Point p) const;
};

CellLayout build_layout(const NetworkConfig& config);

struct UserState {
  Point position;
  int serving_cell = 0;
  double heading_rad = 0.0;
};

// Users stored flat: index = cell * users_per_cell + ue.
struct UserSet {
  int cells = 0;
  int users_per_cell = 0;
  std::vector<UserState> users;

  int size() const { return static_cast<int>(users.size()); }
  const UserState& at(int cell, int ue) const { return users[cell * users_per_cell + ue]; }
  UserState& at(int cell, int ue) { return users[cell * users_per_cell + ue]; }
};

// U users per cell, uniform over the disk of cell_radius around each site.
UserSet spawn_users(const CellLayout& layout, const NetworkConfig& config, Rng& rng);

// Persistent random-walk step: heading jitters slightly and users reflect
// off their own cell disk, so the serving cell never changes.
UserSet step_mobility(const UserSet& users, const CellLayout& layout, const NetworkConfig& config,
                      Rng& rng);

// Positions relative to the serving site for the users of one cell.
std::vector<Point> relative_positions(const UserSet& users, const CellLayout& layout, int cell);

}  // namespace smart
