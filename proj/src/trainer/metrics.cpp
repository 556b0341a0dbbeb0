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


#include "smart/trainer/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "smart/common/errors.hpp"
#include "smart/common/units.hpp"

namespace smart {

double network_sum_rate(std::span<const double> sinr) {
  double total = 0.0;
  for (double g : sinr) total += std::log2(1.0 + g);
  return total;
}

namespace {

// episode -> index of the last step seen for it.
std::map<int, int> final_steps(const MetricsLog& log) {
  std::map<int, int> last;
  for (const auto& r : log.records) {
    auto [it, inserted] = last.try_emplace(r.episode, r.step);
    if (!inserted) it->second = std::max(it->second, r.step);
  }
  return last;
}

}  // namespace

double sum_rate_metric(const MetricsLog& log) {
  if (log.records.empty()) throw ContractViolation("sum_rate_metric needs a nonempty log");
  std::map<int, int> last = final_steps(log);
  std::map<int, double> per_episode;
  for (const auto& r : log.records) {
    if (r.step == last[r.episode]) per_episode[r.episode] += network_sum_rate(r.sinr);
  }
  double total = 0.0;
  for (const auto& [episode, rate] : per_episode) total += rate;
  return total / static_cast<double>(per_episode.size());
}

std::vector<SinrSample> final_step_sinr_samples(const MetricsLog& log) {
  std::map<int, int> last = final_steps(log);
  std::vector<SinrSample> out;
  for (const auto& r : log.records) {
    if (r.step != last[r.episode]) continue;
    for (std::size_t u = 0; u < r.sinr.size(); ++u) {
      out.push_back({r.episode, r.agent, static_cast<int>(u), linear_to_db(r.sinr[u])});
    }
  }
  return out;
}

std::vector<std::pair<double, double>> ccdf(std::span<const double> samples_db,
                                            std::span<const double> thresholds_db) {
  if (samples_db.empty()) throw ContractViolation("ccdf needs at least one sample");
  std::vector<double> sorted(samples_db.begin(), samples_db.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  std::vector<std::pair<double, double>> out;
  out.reserve(thresholds_db.size());
  for (double t : thresholds_db) {
    auto above = sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), t);
    out.emplace_back(t, static_cast<double>(above) / n);
  }
  return out;
}

double final_window_sum_rate(std::span<const double> episode_sum_rate) {
  if (episode_sum_rate.empty()) throw ContractViolation("no episodes to average");
  const std::size_t window = std::max<std::size_t>(1, episode_sum_rate.size() / 4);
  double total = 0.0;
  for (std::size_t i = episode_sum_rate.size() - window; i < episode_sum_rate.size(); ++i) {
    total += episode_sum_rate[i];
  }
  return total / static_cast<double>(window);
}

}  // namespace smart
