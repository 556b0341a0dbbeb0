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


// smart_cli: train, compare, ccdf and oracle commands for the selective
// experience-sharing simulator.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "smart/cli/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Multi-agent DQN interference mitigation with selective experience sharing"};
  app.require_subcommand(1);

  smart::TrainArgs train;
  std::string train_config;
  std::string train_framework;
  std::uint64_t train_seed = 0;
  std::string train_out;
  auto* t = app.add_subcommand("train", "Train one framework with one seed");
  t->add_option("--config", train_config, "Configuration file");
  t->add_option("--framework", train_framework, "smart | share-all | share-nothing | crdu | ctde");
  auto* seed_opt = t->add_option("--seed", train_seed, "Master seed (overrides SMART_SEED)");
  t->add_option("--out", train_out, "Output directory");
  t->add_flag("--single-thread", train.single_thread, "Bit-exact single-threaded execution");
  t->add_flag("--print-config", train.print_config, "Print every resolved setting and exit");

  smart::CompareArgs compare;
  std::string compare_config;
  std::string compare_out;
  auto* c = app.add_subcommand("compare", "Run several frameworks over K seeds");
  c->add_option("--config", compare_config, "Configuration file");
  c->add_option("--frameworks", compare.frameworks, "Frameworks to run")->delimiter(',')->required();
  c->add_option("--seeds", compare.seeds, "Number of seeds, counting up from the master seed")
      ->check(CLI::PositiveNumber);
  c->add_option("--out", compare_out, "Output directory")->required();
  c->add_flag("--single-thread", compare.single_thread, "Bit-exact single-threaded execution");

  smart::CcdfArgs ccdf;
  std::string ccdf_in;
  std::string ccdf_out;
  auto* f = app.add_subcommand("ccdf", "CCDF of an sinr_samples.csv on a 1 dB grid");
  f->add_option("--in", ccdf_in, "sinr_samples.csv")->required();
  f->add_option("--out", ccdf_out, "Output CSV")->required();

  smart::OracleArgs oracle;
  std::string oracle_config;
  std::string oracle_out;
  std::uint64_t oracle_seed = 0;
  auto* o = app.add_subcommand("oracle", "Exhaustive reference optimum for one snapshot");
  o->add_option("--config", oracle_config, "Configuration file");
  auto* oracle_seed_opt = o->add_option("--seed", oracle_seed, "Master seed");
  o->add_option("--out", oracle_out, "Output CSV")->required();
  o->add_option("--search", oracle.search, "step (one-step joint actions) | global (full CSI grid)");
  o->add_option("--grid-step-db", oracle.grid_step_db, "Power grid step for --search global");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : smart::kExitConfig;
  }

  if (t->parsed()) {
    if (!train_config.empty()) train.config = train_config;
    if (!train_framework.empty()) train.framework = train_framework;
    if (seed_opt->count() > 0) train.seed = train_seed;
    if (train_out.empty() && !train.print_config) {
      std::cerr << "config error: --out is required\n";
      return smart::kExitConfig;
    }
    train.out = train_out;
    return smart::cmd_train(train, std::cout, std::cerr);
  }
  if (c->parsed()) {
    if (!compare_config.empty()) compare.config = compare_config;
    compare.out = compare_out;
    return smart::cmd_compare(compare, std::cout, std::cerr);
  }
  if (f->parsed()) {
    ccdf.in = ccdf_in;
    ccdf.out = ccdf_out;
    return smart::cmd_ccdf(ccdf, std::cout, std::cerr);
  }
  if (!oracle_config.empty()) oracle.config = oracle_config;
  if (oracle_seed_opt->count() > 0) oracle.seed = oracle_seed;
  oracle.out = oracle_out;
  return smart::cmd_oracle(oracle, std::cout, std::cerr);
}
