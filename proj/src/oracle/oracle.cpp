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


#include "smart/oracle/oracle.hpp"

#include <cmath>
#include <string>

#include "smart/common/errors.hpp"
#include "smart/common/units.hpp"
#include "smart/env/physics.hpp"
#include "smart/rl/agent_io.hpp"

namespace smart {

namespace {

// |h_{l,j,u}^H w_b|^2 for every link and beam so candidates can be scored
// without touching the channel vectors again.
class BeamGains {
 public:
  BeamGains(const ChannelSet& channels, const Codebook& codebook)
      : cells_(channels.cells), users_(channels.users_per_cell), beams_(codebook.size()) {
    gains_.resize(static_cast<std::size_t>(cells_) * cells_ * users_ * beams_);
    for (int l = 0; l < cells_; ++l) {
      for (int j = 0; j < cells_; ++j) {
        for (int u = 0; u < users_; ++u) {
          for (int b = 0; b < beams_; ++b) {
            gains_[index(l, j, u, b)] = std::norm(channels.h(l, j, u).dot(codebook[b]));
          }
        }
      }
    }
  }

  double operator()(int l, int j, int u, int b) const { return gains_[index(l, j, u, b)]; }

  // Same summation order as received_powers / sinr.
  double sum_rate(std::span<const double> powers_mw, std::span<const int> beams,
                  double noise_mw) const {
    double total = 0.0;
    for (int l = 0; l < cells_; ++l) {
      for (int u = 0; u < users_; ++u) {
        double serving = 0.0;
        double intra = 0.0;
        for (int k = 0; k < users_; ++k) {
          double p = powers_mw[l * users_ + k] * (*this)(l, l, u, beams[l * users_ + k]);
          if (k == u) {
            serving = p;
          } else {
            intra += p;
          }
        }
        double inter = 0.0;
        for (int j = 0; j < cells_; ++j) {
          if (j == l) continue;
          double from_j = 0.0;
          for (int k = 0; k < users_; ++k) {
            from_j += powers_mw[j * users_ + k] * (*this)(l, j, u, beams[j * users_ + k]);
          }
          inter += from_j;
        }
        total += std::log2(1.0 + serving / (noise_mw + intra + inter));
      }
    }
    return total;
  }

 private:
  std::size_t index(int l, int j, int u, int b) const {
    return ((static_cast<std::size_t>(l) * cells_ + j) * users_ + u) * beams_ + b;
  }

  int cells_;
  int users_;
  int beams_;
  std::vector<double> gains_;
};

void check_configuration(const ChannelSet& channels, const NetworkConfiguration& c) {
  const std::size_t n = static_cast<std::size_t>(channels.cells) * channels.users_per_cell;
  if (c.powers_dbm.size() != n || c.beams.size() != n) {
    throw ContractViolation("configuration needs one power and beam per (cell, UE)");
  }
}

}  // namespace

double configuration_sum_rate(const ChannelSet& channels, const NetworkConfiguration& configuration,
                              const NetworkConfig& config, const Codebook& codebook) {
  check_configuration(channels, configuration);
  std::vector<double> mw(configuration.powers_dbm.size());
  for (std::size_t i = 0; i < mw.size(); ++i) mw[i] = dbm_to_mw(configuration.powers_dbm[i]);
  PowerTable table = received_powers(channels, mw, configuration.beams, codebook);
  double total = 0.0;
  for (double g : sinr(table, config.noise_power_mw)) total += std::log2(1.0 + g);
  return total;
}

BruteForceResult brute_force_step(const ChannelSet& channels, const NetworkConfiguration& current,
                                  const NetworkConfig& config, const Codebook& codebook,
                                  std::span<const std::optional<int>> fixed_actions) {
  check_configuration(channels, current);
  const int L = channels.cells;
  const int U = channels.users_per_cell;
  const int A = 1 << (2 * U);
  if (!fixed_actions.empty() && static_cast<int>(fixed_actions.size()) != L) {
    throw ContractViolation("fixed_actions must be empty or hold one entry per agent");
  }

  // Candidate actions per agent, and the cell configuration each one leads to.
  std::vector<std::vector<int>> choices(L);
  std::int64_t space = 1;
  for (int a = 0; a < L; ++a) {
    std::optional<int> fixed = fixed_actions.empty() ? std::nullopt : fixed_actions[a];
    if (fixed) {
      if (*fixed < 0 || *fixed >= A) throw ContractViolation("fixed action out of range");
      choices[a] = {*fixed};
    } else {
      for (int i = 0; i < A; ++i) choices[a].push_back(i);
    }
    space *= static_cast<std::int64_t>(choices[a].size());
    if (space > kBruteForceLimit) {
      throw SearchTooLarge("brute-force step would evaluate more than 2^20 combinations (" +
                           std::to_string(L) + " agents x " + std::to_string(A) + " joint actions)");
    }
  }

  struct CellOutcome {
    std::vector<double> powers_dbm;
    std::vector<double> powers_mw;
    std::vector<int> beams;
  };
  std::vector<std::vector<CellOutcome>> outcomes(L);
  for (int a = 0; a < L; ++a) {
    std::span<const double> prev_p(current.powers_dbm.data() + a * U, U);
    std::span<const int> prev_b(current.beams.data() + a * U, U);
    for (int index : choices[a]) {
      std::vector<UeCommand> commands = decode_action(index, U);
      CellOutcome out;
      out.powers_dbm = apply_power_command(prev_p, commands, config.max_bs_power_mw,
                                           config.min_ue_power_dbm());
      for (double p : out.powers_dbm) out.powers_mw.push_back(dbm_to_mw(p));
      for (int u = 0; u < U; ++u) {
        out.beams.push_back(apply_beam_command(prev_b[u], commands[u].beam_up, codebook.size()));
      }
      outcomes[a].push_back(std::move(out));
    }
  }

  BeamGains gains(channels, codebook);
  std::vector<double> mw(L * U);
  std::vector<int> beams(L * U);
  std::vector<int> odometer(L, 0);
  std::vector<int> best_pick;
  double best = -1.0;
  BruteForceResult result;
  for (std::int64_t n = 0; n < space; ++n) {
    for (int a = 0; a < L; ++a) {
      const CellOutcome& o = outcomes[a][odometer[a]];
      std::copy(o.powers_mw.begin(), o.powers_mw.end(), mw.begin() + a * U);
      std::copy(o.beams.begin(), o.beams.end(), beams.begin() + a * U);
    }
    double rate = gains.sum_rate(mw, beams, config.noise_power_mw);
    if (rate > best) {
      best = rate;
      best_pick = odometer;
    }
    ++result.candidates;
    // Last agent varies fastest, so enumeration is lexicographic.
    for (int a = L - 1; a >= 0; --a) {
      if (++odometer[a] < static_cast<int>(choices[a].size())) break;
      odometer[a] = 0;
    }
  }

  result.sum_rate = best;
  for (int a = 0; a < L; ++a) {
    const CellOutcome& o = outcomes[a][best_pick[a]];
    result.actions.push_back(choices[a][best_pick[a]]);
    result.configuration.powers_dbm.insert(result.configuration.powers_dbm.end(), o.powers_dbm.begin(),
                                           o.powers_dbm.end());
    result.configuration.beams.insert(result.configuration.beams.end(), o.beams.begin(), o.beams.end());
  }
  return result;
}

std::vector<double> power_grid(const NetworkConfig& config, double step_db) {
  if (!(step_db > 0.0)) throw ContractViolation("power grid step must be positive");
  const double lo = config.min_ue_power_dbm();
  const double hi = config.max_bs_power_dbm() - 10.0 * std::log10(config.users_per_cell);
  std::vector<double> grid;
  for (int k = 0; lo + k * step_db < hi - 1e-9; ++k) grid.push_back(lo + k * step_db);
  grid.push_back(std::max(hi, lo));
  return grid;
}

GlobalSearchResult global_csi_search(const ChannelSet& channels, std::span<const double> grid_dbm,
                                     const Codebook& codebook, const NetworkConfig& config) {
  if (grid_dbm.empty()) throw ContractViolation("power grid must not be empty");
  const int L = channels.cells;
  const int U = channels.users_per_cell;
  const int ues = L * U;
  const std::int64_t per_ue = static_cast<std::int64_t>(grid_dbm.size()) * codebook.size();

  std::int64_t space = 1;
  for (int i = 0; i < ues; ++i) {
    space *= per_ue;
    if (space > kGlobalSearchLimit) {
      throw SearchTooLarge("global CSI search would evaluate more than 2^22 configurations (" +
                           std::to_string(per_ue) + " choices per UE, " + std::to_string(ues) +
                           " UEs)");
    }
  }

  std::vector<double> grid_mw;
  for (double p : grid_dbm) grid_mw.push_back(dbm_to_mw(p));

  BeamGains gains(channels, codebook);
  std::vector<double> mw(ues);
  std::vector<int> beams(ues);
  std::vector<std::int64_t> odometer(ues, 0);
  std::vector<std::int64_t> best_pick;
  double best = -1.0;
  GlobalSearchResult result;
  const int B = codebook.size();
  for (std::int64_t n = 0; n < space; ++n) {
    for (int i = 0; i < ues; ++i) {
      mw[i] = grid_mw[odometer[i] / B];
      beams[i] = static_cast<int>(odometer[i] % B);
    }
    bool feasible = true;
    for (int l = 0; l < L && feasible; ++l) {
      double total = 0.0;
      for (int u = 0; u < U; ++u) total += mw[l * U + u];
      feasible = total <= config.max_bs_power_mw * (1.0 + 1e-12);
    }
    if (feasible) {
      ++result.candidates;
      double rate = gains.sum_rate(mw, beams, config.noise_power_mw);
      if (rate > best) {
        best = rate;
        best_pick = odometer;
      }
    }
    for (int i = ues - 1; i >= 0; --i) {
      if (++odometer[i] < per_ue) break;
      odometer[i] = 0;
    }
  }
  if (best_pick.empty()) throw ContractViolation("no configuration on the grid fits the power budget");

  result.sum_rate = best;
  for (int i = 0; i < ues; ++i) {
    result.configuration.powers_dbm.push_back(grid_dbm[best_pick[i] / B]);
    result.configuration.beams.push_back(static_cast<int>(best_pick[i] % B));
  }
  return result;
}

}  // namespace smart
