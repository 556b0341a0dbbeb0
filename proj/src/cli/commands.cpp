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


#include "smart/cli/commands.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "smart/common/errors.hpp"
#include "smart/io/artifacts.hpp"
#include "smart/io/config_file.hpp"
#include "smart/io/csv.hpp"
#include "smart/oracle/oracle.hpp"
#include "smart/trainer/environment.hpp"
#include "smart/trainer/trainer.hpp"

namespace smart {

namespace {

// Maps library exceptions onto exit codes.
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "runtime error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

std::string join(const std::vector<std::string>& items, char sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

double mean_sinr_db(const MetricsLog& log) {
  std::vector<SinrSample> samples = final_step_sinr_samples(log);
  if (samples.empty()) return std::nan("");
  double total = 0.0;
  for (const auto& s : samples) total += s.sinr_db;
  return total / static_cast<double>(samples.size());
}

}  // namespace

ResolvedConfig resolve_config(const std::optional<std::filesystem::path>& path,
                              const std::optional<std::string>& framework,
                              const std::optional<std::uint64_t>& seed) {
  ResolvedConfig r;
  if (path) r.config = load_config(*path);
  r.seed_source = "config";
  if (const char* env = std::getenv(kSeedVariable); env != nullptr && *env != '\0') {
    std::string text = env;
    char* end = nullptr;
    unsigned long long v = std::strtoull(text.c_str(), &end, 10);
    if (text[0] == '-' || end != text.c_str() + text.size()) {
      throw ConfigError(std::string(kSeedVariable) + "='" + text + "' is not a non-negative integer");
    }
    r.config.seed = v;
    r.seed_source = std::string("env:") + kSeedVariable;
  }
  if (seed) {
    r.config.seed = *seed;
    r.seed_source = "flag";
  }
  if (framework) r.config.framework = parse_framework(*framework);
  r.config.validate();
  return r;
}

int cmd_train(const TrainArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    ResolvedConfig rc = resolve_config(args.config, args.framework, args.seed);
    if (args.print_config) {
      out << serialize_config(rc.config) << "# seed_source = " << rc.seed_source << "\n";
      return static_cast<int>(kExitOk);
    }
    RunArtifacts run = run_training(rc.config, nullptr, args.single_thread);
    write_run_artifacts(args.out, run, rc.seed_source);
    if (run.abort_reason) {
      err << "run aborted: " << *run.abort_reason << "\n";
      return static_cast<int>(kExitRuntime);
    }
    out << to_string(rc.config.framework) << " seed " << rc.config.seed << ": final-window sum-rate "
        << format_number(final_window_sum_rate(run.metrics.episode_sum_rate)) << " bits/s/Hz, "
        << run.ledger.total_scalars() << " scalars shared\n";
    return static_cast<int>(kExitOk);
  });
}

int cmd_compare(const CompareArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (args.seeds < 1) throw ConfigError("--seeds must be >= 1");
    if (args.frameworks.empty()) throw ConfigError("--frameworks must name at least one framework");
    ResolvedConfig rc = resolve_config(args.config, std::nullopt, std::nullopt);
    std::vector<Framework> frameworks;
    for (const auto& name : args.frameworks) frameworks.push_back(parse_framework(name));

    CsvTable summary;
    summary.header = {"row", "framework", "seed", "status", "final_sum_rate", "mean_eval_sinr_db",
                      "overhead_scalars", "zero_share_fraction"};
    bool failed = false;
    for (Framework f : frameworks) {
      std::vector<std::vector<double>> ok_values;
      for (int k = 0; k < args.seeds; ++k) {
        RunConfig config = rc.config;
        config.framework = f;
        config.seed = rc.config.seed + static_cast<std::uint64_t>(k);
        const std::string name = to_string(f);
        RunArtifacts run;
        std::string status = "ok";
        try {
          run = run_training(config, nullptr, args.single_thread);
          if (run.abort_reason) status = "aborted";
        } catch (const std::exception& e) {
          status = "failed";
          err << name << " seed " << config.seed << ": " << e.what() << "\n";
        }
        if (status != "failed") {
          write_run_artifacts(args.out / name / ("seed_" + std::to_string(config.seed)), run,
                              rc.seed_source);
        }
        if (status != "ok") {
          failed = true;
          summary.rows.push_back({"run", name, std::to_string(config.seed), status, "nan", "nan",
                                  "nan", "nan"});
          continue;
        }
        const OverheadSummary overhead = overhead_report(run.ledger);
        const double rate = final_window_sum_rate(run.metrics.episode_sum_rate);
        const double sinr =
            config.training.eval_episodes > 0
                ? mean_sinr_db(evaluate(run.networks, config, config.training.eval_episodes, config.seed))
                : std::nan("");
        std::vector<double> values = {rate, sinr, static_cast<double>(overhead.total_scalars),
                                      overhead.zero_share_fraction};
        summary.rows.push_back({"run", name, std::to_string(config.seed), status,
                                format_number(values[0]), format_number(values[1]),
                                format_number(overhead.total_scalars), format_number(values[3])});
        ok_values.push_back(values);
        out << name << " seed " << config.seed << ": final-window sum-rate " << format_number(rate)
            << "\n";
      }

      // Aggregates over the successful runs; `seed` holds how many.
      const std::size_t n = ok_values.size();
      std::vector<std::string> mean_row = {"mean", to_string(f), std::to_string(n), "ok"};
      std::vector<std::string> std_row = {"std", to_string(f), std::to_string(n), "ok"};
      for (std::size_t c = 0; c < 4; ++c) {
        double m = 0.0;
        for (const auto& v : ok_values) m += v[c];
        m = n > 0 ? m / static_cast<double>(n) : std::nan("");
        double var = 0.0;
        for (const auto& v : ok_values) var += (v[c] - m) * (v[c] - m);
        double sd = n > 1 ? std::sqrt(var / static_cast<double>(n - 1)) : (n == 1 ? 0.0 : std::nan(""));
        mean_row.push_back(format_number(m));
        std_row.push_back(format_number(sd));
      }
      summary.rows.push_back(mean_row);
      summary.rows.push_back(std_row);
    }
    std::filesystem::create_directories(args.out);
    write_csv(args.out / "summary.csv", summary);
    return static_cast<int>(failed ? kExitRuntime : kExitOk);
  });
}

int cmd_ccdf(const CcdfArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    CsvTable in = read_csv(args.in);
    const std::size_t col = in.column("sinr_db");
    std::vector<double> samples;
    for (std::size_t r = 0; r < in.rows.size(); ++r) {
      double v = in.number(r, col);
      if (!std::isfinite(v)) {
        throw IoError(args.in.string() + ": row " + std::to_string(r + 2) + ": sinr_db is not finite");
      }
      samples.push_back(v);
    }
    if (samples.empty()) throw IoError(args.in.string() + ": no samples");
    double lo = samples[0];
    double hi = samples[0];
    for (double v : samples) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    std::vector<double> grid;
    for (double t = std::floor(lo); t <= std::ceil(hi); t += 1.0) grid.push_back(t);

    CsvTable table;
    table.header = {"threshold_db", "fraction"};
    for (const auto& [t, f] : ccdf(samples, grid)) table.rows.push_back({format_number(t), format_number(f)});
    write_csv(args.out, table);
    out << samples.size() << " samples, " << grid.size() << " thresholds\n";
    return static_cast<int>(kExitOk);
  });
}

int cmd_oracle(const OracleArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    ResolvedConfig rc = resolve_config(args.config, std::nullopt, args.seed);
    const NetworkConfig& nc = rc.config.network;
    NetworkEnvironment env(nc, make_stream(rc.config.seed, Stream::kOracle));
    env.reset();

    NetworkConfiguration best;
    double rate = 0.0;
    std::int64_t candidates = 0;
    std::vector<std::string> actions;
    if (args.search == "step") {
      NetworkConfiguration start{env.powers_dbm(), env.beams()};
      BruteForceResult r = brute_force_step(env.channels(), start, nc, env.codebook());
      best = r.configuration;
      rate = r.sum_rate;
      candidates = r.candidates;
      for (int a : r.actions) actions.push_back(std::to_string(a));
    } else if (args.search == "global") {
      std::vector<double> grid = power_grid(nc, args.grid_step_db);
      GlobalSearchResult r = global_csi_search(env.channels(), grid, env.codebook(), nc);
      best = r.configuration;
      rate = r.sum_rate;
      candidates = r.candidates;
    } else {
      throw ConfigError("--search must be step or global, got '" + args.search + "'");
    }

    std::vector<std::string> powers;
    std::vector<std::string> beams;
    for (double p : best.powers_dbm) powers.push_back(format_number(p));
    for (int b : best.beams) beams.push_back(std::to_string(b));
    CsvTable table;
    table.header = {"search", "seed", "sum_rate", "candidates", "actions", "powers_dbm", "beams"};
    table.rows.push_back({args.search, std::to_string(rc.config.seed), format_number(rate),
                          std::to_string(candidates), join(actions, ' '), join(powers, ' '),
                          join(beams, ' ')});
    write_csv(args.out, table);
    out << args.search << " optimum " << format_number(rate) << " bits/s/Hz over " << candidates
        << " candidates\n";
    return static_cast<int>(kExitOk);
  });
}

}  // namespace smart
