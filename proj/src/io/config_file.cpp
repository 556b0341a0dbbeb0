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


#include "smart/io/config_file.hpp"

#include <cerrno>
#include <cstdlib>
#include <functional>
#include <set>

#include "smart/common/errors.hpp"
#include "smart/common/units.hpp"
#include "smart/io/csv.hpp"

namespace smart {

namespace {

double to_double(const std::string& s) {
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
    throw ConfigError("'" + s + "' is not a finite number");
  }
  return v;
}

long long to_integer(const std::string& s) {
  errno = 0;
  char* end = nullptr;
  long long v = std::strtoll(s.c_str(), &end, 10);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE) {
    throw ConfigError("'" + s + "' is not an integer");
  }
  return v;
}

int to_int(const std::string& s) {
  long long v = to_integer(s);
  if (v < -2147483647LL || v > 2147483647LL) throw ConfigError("'" + s + "' is out of range");
  return static_cast<int>(v);
}

std::uint64_t to_seed(const std::string& s) {
  errno = 0;
  char* end = nullptr;
  if (s.empty() || s[0] == '-') throw ConfigError("seed '" + s + "' must be a non-negative integer");
  unsigned long long v = std::strtoull(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size() || errno == ERANGE) {
    throw ConfigError("seed '" + s + "' must be a non-negative integer");
  }
  return v;
}

bool to_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw ConfigError("'" + s + "' is not a boolean (expected true | false)");
}

std::string from_bool(bool b) { return b ? "true" : "false"; }

struct Key {
  const char* section;
  const char* name;
  std::function<std::string(const RunConfig&)> get;
  std::function<void(RunConfig&, const std::string&)> set;
};

#define SMART_INT(section, name, field)                                             \
  Key{section, #name, [](const RunConfig& c) { return format_number(c.field); },     \
      [](RunConfig& c, const std::string& v) { c.field = to_int(v); }}
#define SMART_REAL(section, name, field)                                            \
  Key{section, #name, [](const RunConfig& c) { return format_number(c.field); },     \
      [](RunConfig& c, const std::string& v) { c.field = to_double(v); }}
#define SMART_CONVERTED(section, name, field, to_file, from_file)                           \
  Key{section, #name, [](const RunConfig& c) { return format_number(to_file(c.field)); },   \
      [](RunConfig& c, const std::string& v) { c.field = from_file(to_double(v)); }}

double rad_to_deg(double r) { return r * 180.0 / kPi; }
double deg_to_rad(double d) { return d * kPi / 180.0; }
double mps_to_kmh(double v) { return v * 3.6; }

const std::vector<Key>& keys() {
  static const std::vector<Key> table = {
      SMART_INT("network", cells, network.cells),
      SMART_INT("network", users_per_cell, network.users_per_cell),
      SMART_INT("network", antennas, network.antennas),
      SMART_INT("network", phase_bits, network.phase_bits),
      SMART_REAL("network", cell_radius_m, network.cell_radius_m),
      SMART_REAL("network", inter_site_distance_m, network.inter_site_distance_m),
      SMART_REAL("network", carrier_freq_hz, network.carrier_freq_hz),
      SMART_CONVERTED("network", ue_speed_kmh, network.ue_speed_mps, mps_to_kmh, kmh_to_mps),
      SMART_REAL("network", step_duration_s, network.step_duration_s),
      SMART_CONVERTED("network", noise_power_dbm, network.noise_power_mw, mw_to_dbm, dbm_to_mw),
      SMART_CONVERTED("network", max_bs_power_dbm, network.max_bs_power_mw, mw_to_dbm, dbm_to_mw),
      SMART_CONVERTED("network", min_ue_power_dbm, network.min_ue_power_mw, mw_to_dbm, dbm_to_mw),
      SMART_CONVERTED("network", gamma_min_db, network.gamma_min, linear_to_db, db_to_linear),
      SMART_CONVERTED("network", interference_threshold_dbm, network.interference_threshold_mw,
                      mw_to_dbm, dbm_to_mw),
      SMART_REAL("network", punishment, network.punishment),
      SMART_REAL("network", pathloss_exponent, network.pathloss_exponent),
      SMART_INT("network", paths, network.paths),
      SMART_CONVERTED("network", angular_spread_deg, network.angular_spread_rad, rad_to_deg,
                      deg_to_rad),
      Key{"network", "static_channels",
          [](const RunConfig& c) { return from_bool(c.network.static_channels); },
          [](RunConfig& c, const std::string& v) { c.network.static_channels = to_bool(v); }},

      SMART_INT("training", episodes, training.episodes),
      SMART_INT("training", steps_per_episode, training.steps_per_episode),
      SMART_INT("training", batch_size, training.batch_size),
      SMART_REAL("training", learning_rate, training.learning_rate),
      SMART_REAL("training", discount, training.discount),
      SMART_INT("training", buffer_capacity, training.buffer_capacity),
      SMART_INT("training", target_period, training.target_period),
      SMART_REAL("training", epsilon_start, training.epsilon_start),
      SMART_REAL("training", epsilon_decay, training.epsilon_decay),
      SMART_REAL("training", epsilon_min, training.epsilon_min),
      SMART_INT("training", hidden1, training.hidden1),
      SMART_INT("training", hidden2, training.hidden2),
      SMART_REAL("training", reward_scale, training.reward_scale),
      SMART_REAL("training", grad_clip_norm, training.grad_clip_norm),
      SMART_INT("training", ctde_period, training.ctde_period),
      Key{"training", "attribution",
          [](const RunConfig& c) { return to_string(c.training.attribution); },
          [](RunConfig& c, const std::string& v) { c.training.attribution = parse_attribution(v); }},
      Key{"training", "sum_rate_mode",
          [](const RunConfig& c) { return to_string(c.training.sum_rate_mode); },
          [](RunConfig& c, const std::string& v) {
            c.training.sum_rate_mode = parse_sum_rate_mode(v);
          }},
      SMART_INT("training", eval_episodes, training.eval_episodes),

      Key{"run", "framework", [](const RunConfig& c) { return to_string(c.framework); },
          [](RunConfig& c, const std::string& v) { c.framework = parse_framework(v); }},
      Key{"run", "seed", [](const RunConfig& c) { return std::to_string(c.seed); },
          [](RunConfig& c, const std::string& v) { c.seed = to_seed(v); }},
  };
  return table;
}

#undef SMART_INT
#undef SMART_REAL
#undef SMART_CONVERTED

std::string trim(const std::string& s) {
  const char* ws = " \t";
  std::size_t b = s.find_first_not_of(ws);
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig config;
  std::string section;
  std::set<std::string> seen;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string raw = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("unterminated section header '" + line + "'", line_no);
      section = trim(line.substr(1, line.size() - 2));
      if (section != "network" && section != "training" && section != "run") {
        throw ConfigError("unknown section [" + section + "]", line_no);
      }
      continue;
    }

    std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("expected 'key = value', got '" + line + "'", line_no);
    if (section.empty()) throw ConfigError("key outside of any section", line_no);
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));

    const Key* match = nullptr;
    for (const Key& k : keys()) {
      if (section == k.section && key == k.name) match = &k;
    }
    if (match == nullptr) throw ConfigError("unknown key '" + key + "' in [" + section + "]", line_no);
    if (!seen.insert(section + "." + key).second) {
      throw ConfigError("duplicate key '" + key + "' in [" + section + "]", line_no);
    }
    try {
      match->set(config, value);
    } catch (const ConfigError& e) {
      throw ConfigError(key + ": " + e.what(), line_no);
    }
  }
  config.validate();
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  return parse_config(read_text(path));
}

std::vector<ConfigEntry> config_entries(const RunConfig& config) {
  std::vector<ConfigEntry> out;
  for (const Key& k : keys()) out.push_back({k.section, k.name, k.get(config)});
  return out;
}

std::string serialize_config(const RunConfig& config) {
  std::string out;
  std::string section;
  for (const ConfigEntry& e : config_entries(config)) {
    if (e.section != section) {
      if (!section.empty()) out += '\n';
      section = e.section;
      out += "[" + section + "]\n";
    }
    out += e.key + " = " + e.value + "\n";
  }
  return out;
}

}  // namespace smart
