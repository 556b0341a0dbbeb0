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

#include <filesystem>
#include <string>

#include "smart/io/csv.hpp"
#include "smart/sharing/sharing.hpp"
#include "smart/trainer/metrics.hpp"
#include "smart/trainer/trainer.hpp"

namespace smart {

// episode, step (within the episode), agent, reward, loss, epsilon,
// shared_tx, shared_rx
CsvTable metrics_table(const MetricsLog& log);
// episode, cell, ue, sinr_db at the final step of every episode
CsvTable sinr_samples_table(const MetricsLog& log);
// episode, sum_rate
CsvTable sumrate_table(const MetricsLog& log);
// step (global), agent, experiences_tx, scalars_tx
CsvTable overhead_table(const OverheadLedger& ledger);

// Resolved configuration plus run summary as pretty-printed JSON.
// `seed_source` says where the seed came from (config, env, flag).
std::string run_snapshot(const RunArtifacts& run, const std::string& seed_source);

// metrics.csv, sinr_samples.csv, sumrate.csv, overhead.csv and run.json.
void write_run_artifacts(const std::filesystem::path& dir, const RunArtifacts& run,
                         const std::string& seed_source);

}  // namespace smart
