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


#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "smart/io/csv.hpp"
#include "smart/trainer/metrics.hpp"

namespace smart {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string output;
};

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("smart_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

// Runs the CLI with `args`, stdout and stderr merged.
Result cli(const std::string& args, const std::string& env = "") {
  fs::path log = fs::temp_directory_path() / "smart_cli_last.log";
  std::string cmd = env + (env.empty() ? "" : " ") + std::string("'") + SMART_CLI_PATH + "' " + args +
                    " > '" + log.string() + "' 2>&1";
  int status = std::system(cmd.c_str());
  Result r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.output = read_text(log);
  return r;
}

fs::path tiny_config(const fs::path& dir) {
  fs::path path = dir / "tiny.ini";
  write_text(path,
             "[training]\nepisodes = 3\nsteps_per_episode = 4\nbatch_size = 2\nhidden1 = 6\n"
             "hidden2 = 6\neval_episodes = 1\n[run]\nseed = 5\n");
  return path;
}

TEST(Cli, MissingConfigIsAnIoError) {
  Result r = cli("train --config /nonexistent/run.ini --out /tmp/x");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.output.find("/nonexistent/run.ini"), std::string::npos);
}

TEST(Cli, BadKeyIsAConfigErrorWithLine) {
  fs::path dir = scratch("badkey");
  write_text(dir / "bad.ini", "[network]\ncells = 2\nbogus = 1\n");
  Result r = cli("train --config '" + (dir / "bad.ini").string() + "' --out '" + dir.string() + "'");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.output.find("line 3"), std::string::npos);
}

TEST(Cli, TrainWritesEveryArtifact) {
  fs::path dir = scratch("train");
  Result r = cli("train --config '" + tiny_config(dir).string() + "' --out '" + (dir / "run").string() +
                 "' --single-thread");
  ASSERT_EQ(r.code, 0) << r.output;
  for (const char* f : {"metrics.csv", "sinr_samples.csv", "sumrate.csv", "overhead.csv", "run.json"}) {
    EXPECT_TRUE(fs::exists(dir / "run" / f)) << f;
  }
}

TEST(Cli, SingleThreadRunsAreByteIdentical) {
  fs::path dir = scratch("repro");
  fs::path cfg = tiny_config(dir);
  for (const char* sub : {"a", "b"}) {
    ASSERT_EQ(cli("train --config '" + cfg.string() + "' --out '" + (dir / sub).string() +
                  "' --single-thread --framework share-all")
                  .code,
              0);
  }
  for (const char* f : {"metrics.csv", "sinr_samples.csv", "sumrate.csv", "overhead.csv", "run.json"}) {
    EXPECT_EQ(read_text(dir / "a" / f), read_text(dir / "b" / f)) << f;
  }
}

TEST(Cli, EmittedCsvsRoundTrip) {
  fs::path dir = scratch("roundtrip");
  ASSERT_EQ(cli("train --config '" + tiny_config(dir).string() + "' --out '" + dir.string() + "'").code, 0);
  for (const char* f : {"metrics.csv", "sinr_samples.csv", "sumrate.csv", "overhead.csv"}) {
    const std::string text = read_text(dir / f);
    EXPECT_EQ(serialize_csv(parse_csv(text)), text) << f;
  }
}

TEST(Cli, PrintConfigDumpsEveryValue) {
  Result r = cli("train --print-config --seed 11");
  ASSERT_EQ(r.code, 0);
  for (const char* key : {"[network]", "[training]", "[run]", "max_bs_power_dbm = 24", "seed = 11",
                          "noise_power_dbm = -110", "# seed_source = flag"}) {
    EXPECT_NE(r.output.find(key), std::string::npos) << key;
  }
}

TEST(Cli, SeedEnvironmentVariableIsEchoed) {
  fs::path dir = scratch("envseed");
  Result r = cli("train --config '" + tiny_config(dir).string() + "' --out '" + dir.string() + "'",
                 "SMART_SEED=77");
  ASSERT_EQ(r.code, 0) << r.output;
  const std::string json = read_text(dir / "run.json");
  EXPECT_NE(json.find("\"seed\": 77"), std::string::npos);
  EXPECT_NE(json.find("env:SMART_SEED"), std::string::npos);
  // The flag wins over the variable.
  Result flag = cli("train --print-config --seed 3", "SMART_SEED=77");
  EXPECT_NE(flag.output.find("seed = 3\n"), std::string::npos);
}

TEST(Cli, CompareShareNothingSingleSeed) {
  fs::path dir = scratch("compare1");
  Result r = cli("compare --config '" + tiny_config(dir).string() + "' --frameworks share-nothing --seeds 1 --out '" +
                 dir.string() + "' --single-thread");
  ASSERT_EQ(r.code, 0) << r.output;
  CsvTable s = read_csv(dir / "summary.csv");
  ASSERT_EQ(s.rows.size(), 3u);
  EXPECT_EQ(s.rows[0][s.column("row")], "run");
  EXPECT_EQ(s.rows[0][s.column("overhead_scalars")], "0");
  EXPECT_EQ(s.rows[0][s.column("zero_share_fraction")], "1");
}

TEST(Cli, CompareAggregatesOverEverySeed) {
  fs::path dir = scratch("compare5");
  Result r = cli("compare --config '" + tiny_config(dir).string() + "' --frameworks smart,share-all --seeds 5 --out '" +
                 dir.string() + "' --single-thread");
  ASSERT_EQ(r.code, 0) << r.output;
  CsvTable s = read_csv(dir / "summary.csv");
  ASSERT_EQ(s.rows.size(), 2u * (5 + 2));
  const std::size_t rate = s.column("final_sum_rate");
  for (int f = 0; f < 2; ++f) {
    const std::size_t base = f * 7;
    double total = 0.0;
    for (int k = 0; k < 5; ++k) {
      const auto& row = s.rows[base + k];
      EXPECT_EQ(row[s.column("seed")], std::to_string(5 + k));
      // The summary rate is the final-window average of that run's sumrate.csv.
      CsvTable per_run = read_csv(dir / row[s.column("framework")] / ("seed_" + row[s.column("seed")]) / "sumrate.csv");
      std::vector<double> series;
      for (std::size_t i = 0; i < per_run.rows.size(); ++i) series.push_back(per_run.number(i, 1));
      EXPECT_NEAR(s.number(base + k, rate), final_window_sum_rate(series), 1e-9);
      total += s.number(base + k, rate);
    }
    EXPECT_EQ(s.rows[base + 5][0], "mean");
    EXPECT_EQ(s.rows[base + 5][s.column("seed")], "5");
    EXPECT_NEAR(s.number(base + 5, rate), total / 5.0, 1e-9);
    EXPECT_EQ(s.rows[base + 6][0], "std");
  }
}

TEST(Cli, UnknownFrameworkIsAConfigError) {
  fs::path dir = scratch("badfw");
  EXPECT_EQ(cli("compare --frameworks magic --seeds 1 --out '" + dir.string() + "'").code, 1);
}

TEST(Cli, CcdfOnThreeSamples) {
  fs::path dir = scratch("ccdf");
  write_text(dir / "in.csv", "episode,cell,ue,sinr_db\n0,0,0,0\n0,0,1,10\n0,0,2,20\n");
  ASSERT_EQ(cli("ccdf --in '" + (dir / "in.csv").string() + "' --out '" + (dir / "out.csv").string() + "'").code, 0);
  CsvTable t = read_csv(dir / "out.csv");
  EXPECT_EQ(t.header, (std::vector<std::string>{"threshold_db", "fraction"}));
  ASSERT_EQ(t.rows.size(), 21u);
  EXPECT_EQ(t.rows[5][0], "5");
  EXPECT_NEAR(t.number(5, 1), 2.0 / 3.0, 1e-12);
  for (std::size_t i = 1; i < t.rows.size(); ++i) EXPECT_LE(t.number(i, 1), t.number(i - 1, 1));
}

TEST(Cli, CcdfRejectsEmptyAndMalformedInput) {
  fs::path dir = scratch("ccdfbad");
  write_text(dir / "empty.csv", "episode,cell,ue,sinr_db\n");
  Result empty = cli("ccdf --in '" + (dir / "empty.csv").string() + "' --out '" + (dir / "o.csv").string() + "'");
  EXPECT_NE(empty.code, 0);
  write_text(dir / "bad.csv", "episode,cell,ue,sinr_db\n0,0,0,1\n0,0\n");
  Result bad = cli("ccdf --in '" + (dir / "bad.csv").string() + "' --out '" + (dir / "o.csv").string() + "'");
  EXPECT_EQ(bad.code, 3);
  EXPECT_NE(bad.output.find("row 3"), std::string::npos);
}

TEST(Cli, OracleEmitsOneRow) {
  fs::path dir = scratch("oracle");
  write_text(dir / "o.ini", "[network]\nusers_per_cell = 1\nantennas = 2\nphase_bits = 1\n");
  for (const char* search : {"step", "global"}) {
    fs::path out = dir / (std::string(search) + ".csv");
    Result r = cli("oracle --config '" + (dir / "o.ini").string() + "' --seed 4 --search " + search +
                   " --out '" + out.string() + "'");
    ASSERT_EQ(r.code, 0) << r.output;
    CsvTable t = read_csv(out);
    ASSERT_EQ(t.rows.size(), 1u);
    EXPECT_EQ(t.rows[0][0], search);
    EXPECT_GT(t.number(0, t.column("sum_rate")), 0.0);
  }
}

}  // namespace
}  // namespace smart
