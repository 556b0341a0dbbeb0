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


#include "smart/io/artifacts.hpp"

#include <system_error>

#include "json.hpp"
#include "smart/common/errors.hpp"
#include "smart/common/units.hpp"
#include "smart/io/config_file.hpp"

namespace smart {

CsvTable metrics_table(const MetricsLog& log) {
  CsvTable t;
  t.header = {"episode", "step", "agent", "reward", "loss", "epsilon", "shared_tx", "shared_rx"};
  t.rows.reserve(log.records.size());
  for (const StepRecord& r : log.records) {
    t.rows.push_back({format_number(r.episode), format_number(r.step), format_number(r.agent),
                      format_number(r.reward), format_number(r.loss), format_number(r.epsilon),
                      format_number(r.shared_tx), format_number(r.shared_rx)});
  }
  return t;
}

CsvTable sinr_samples_table(const MetricsLog& log) {
  CsvTable t;
  t.header = {"episode", "cell", "ue", "sinr_db"};
  for (const SinrSample& s : final_step_sinr_samples(log)) {
    t.rows.push_back({format_number(s.episode), format_number(s.cell), format_number(s.ue),
                      format_number(s.sinr_db)});
  }
  return t;
}

CsvTable sumrate_table(const MetricsLog& log) {
  CsvTable t;
  t.header = {"episode", "sum_rate"};
  for (int e = 0; e < log.episodes(); ++e) {
    t.rows.push_back({format_number(e), format_number(log.episode_sum_rate[e])});
  }
  return t;
}

CsvTable overhead_table(const OverheadLedger& ledger) {
  CsvTable t;
  t.header = {"step", "agent", "experiences_tx", "scalars_tx"};
  for (const auto& e : ledger.entries()) {
    t.rows.push_back({format_number(e.step), format_number(e.agent), format_number(e.experiences_tx),
                      format_number(e.scalars_tx)});
  }
  return t;
}

std::string run_snapshot(const RunArtifacts& run, const std::string& seed_source) {
  nlohmann::ordered_json j;
  for (const ConfigEntry& e : config_entries(run.config)) j["config"][e.section][e.key] = e.value;
  j["seed"] = run.seed;
  j["seed_source"] = seed_source;

  const OverheadSummary overhead = overhead_report(run.ledger);
  auto& s = j["summary"];
  s["episodes_completed"] = run.metrics.episodes();
  s["gradient_steps"] = run.gradient_steps;
  s["final_window_sum_rate"] =
      run.metrics.episodes() > 0 ? format_number(final_window_sum_rate(run.metrics.episode_sum_rate))
                                 : "nan";
  s["overhead_experiences"] = overhead.total_experiences;
  s["overhead_scalars"] = overhead.total_scalars;
  s["zero_share_fraction"] = format_number(overhead.zero_share_fraction);
  s["aborted"] = run.abort_reason.has_value();
  if (run.abort_reason) s["abort_reason"] = *run.abort_reason;
  return j.dump(2) + "\n";
}

void write_run_artifacts(const std::filesystem::path& dir, const RunArtifacts& run,
                         const std::string& seed_source) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
  write_csv(dir / "metrics.csv", metrics_table(run.metrics));
  write_csv(dir / "sinr_samples.csv", sinr_samples_table(run.metrics));
  write_csv(dir / "sumrate.csv", sumrate_table(run.metrics));
  write_csv(dir / "overhead.csv", overhead_table(run.ledger));
  write_text(dir / "run.json", run_snapshot(run, seed_source));
}

}  // namespace smart
