// Copyright 2026 The fedl-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fedl_lab/errors.hpp"
#include "fedl_lab/io_util.hpp"
#include "fedl_lab/wireless/allocation.hpp"
#include "fedl_lab/wireless/instance.hpp"
#include "fedl_lab/wireless/kkt.hpp"
#include "fedl_lab_cli/cli.hpp"
#include "support/fixtures.hpp"

namespace fedl_lab::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

using Table = std::vector<std::vector<std::string>>;

Table read_csv(const fs::path& path) {
  Table rows;
  std::istringstream in(read_file(path));
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) cells.push_back(c);
    rows.push_back(cells);
  }
  return rows;
}

std::size_t column(const Table& t, const std::string& name) {
  for (std::size_t j = 0; j < t.front().size(); ++j) {
    if (t.front()[j] == name) return j;
  }
  ADD_FAILURE() << "no column " << name;
  return 0;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("fedl_lab_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  int call(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return run(args, out_, err_);
  }

  json read_json(const fs::path& p) { return json::parse(read_file(p)); }

  // A small dataset that trains quickly.
  fs::path small_dataset() {
    const auto spec = write("spec.json",
                            R"({"n_users": 4, "dim": 3, "size_range": [40, 60], "seed": 3})");
    EXPECT_EQ(call({"datagen", "--config", spec.string(), "--out", (dir_ / "data").string()}),
              kExitOk)
        << err_.str();
    return dir_ / "data";
  }

  fs::path instance_file(std::uint64_t seed) {
    return write("instance.json", wireless::instance_to_json(testing::wireless_instance(seed)));
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST(GitBlobHash, MatchesGitForKnownBlobs) {
  EXPECT_EQ(git_blob_hash(""), "e69de29bb2d1d6434b8b29ae775ad8c2e48c5391");
  EXPECT_EQ(git_blob_hash("hello\n"), "ce013625030ba8dba906f756967f9e9ca394464a");
}

TEST(KappaGrid, ParsesLogAndLinearSpacing) {
  const auto g = parse_kappa_grid("0.01:100:5:log");
  ASSERT_EQ(g.size(), 5u);
  EXPECT_DOUBLE_EQ(g[0], 0.01);
  EXPECT_NEAR(g[2], 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(g[4], 100.0);
  EXPECT_EQ(parse_kappa_grid("1:3:3:lin"), (std::vector<double>{1, 2, 3}));
  EXPECT_TRUE(parse_kappa_grid("1:10:0:log").empty());
}

TEST(KappaGrid, RejectsMalformedSpecs) {
  for (const char* bad : {"1:10:5", "a:10:5:log", "1:10:2.5:log", "1:10:5:cubic",
                          "10:1:5:log", "0:1:5:log", "1:10:-1:log"}) {
    EXPECT_THROW(parse_kappa_grid(bad), InvalidInputError) << bad;
  }
}

TEST_F(Cli, HelpAndUsageErrors) {
  EXPECT_EQ(call({"--help"}), kExitOk);
  EXPECT_NE(out_.str().find("datagen"), std::string::npos);
  EXPECT_EQ(call({}), kExitInputError);
  EXPECT_EQ(call({"explode"}), kExitInputError);
  EXPECT_EQ(call({"allocate"}), kExitInputError);  // --out missing
  EXPECT_EQ(call({"allocate", "--out", dir_.string(), "--kappa", "fast"}), kExitInputError);
}

TEST_F(Cli, DatagenWritesOneFilePerUserAndManifest) {
  const auto data = small_dataset();
  std::size_t train_files = 0;
  for (const auto& e : fs::directory_iterator(data / "train")) train_files += e.is_regular_file();
  EXPECT_EQ(train_files, 4u);
  EXPECT_TRUE(fs::exists(data / "dataset.json"));
  const auto m = read_json(data / "manifest.json");
  EXPECT_EQ(m["command"], "datagen");
  EXPECT_EQ(m["seed"], 3);
  EXPECT_EQ(m["content_hash"].get<std::string>().size(), 40u);
  EXPECT_EQ(m["outputs"].size(), 9u);  // 4 train, 4 test, dataset.json
  EXPECT_TRUE(m["wall_time_s"].is_number());
}

TEST_F(Cli, DatagenRejectsInvertedSizeRange) {
  const auto spec = write("spec.json", R"({"size_range": [600, 500]})");
  EXPECT_EQ(call({"datagen", "--config", spec.string(), "--out", dir_.string()}),
            kExitInputError);
  EXPECT_NE(err_.str().find("size_range"), std::string::npos);
  EXPECT_EQ(call({"datagen", "--out", dir_.string()}), kExitInputError);
  const auto unknown = write("unknown.json", R"({"users": 3})");
  EXPECT_EQ(call({"datagen", "--config", unknown.string(), "--out", dir_.string()}),
            kExitInputError);
}

TEST_F(Cli, DatagenRerunReproducesHashAndBytes) {
  const auto spec = write("spec.json", R"({"n_users": 3, "dim": 2, "size_range": [20, 30]})");
  auto gen = [&](const std::string& sub, const char* seed) {
    EXPECT_EQ(call({"datagen", "--config", spec.string(), "--out", (dir_ / sub).string(),
                    "--seed", seed}),
              kExitOk);
    return read_json(dir_ / sub / "manifest.json")["content_hash"].get<std::string>();
  };
  const auto a = gen("a", "5");
  const auto b = gen("b", "5");
  const auto c = gen("c", "6");
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  EXPECT_EQ(read_file(dir_ / "a" / "train" / "ue_0001.csv"),
            read_file(dir_ / "b" / "train" / "ue_0001.csv"));
}

TEST_F(Cli, TrainWithZeroEtaKeepsLossFlat) {
  const auto data = small_dataset();
  const auto cfg = write("train.json", R"({"eta": 0, "theta": 0.1, "K_g": 5, "K_l": 5, "h": 0.01})");
  ASSERT_EQ(call({"train", "--config", cfg.string(), "--data", data.string(), "--out",
                  (dir_ / "run").string()}),
            kExitOk)
      << err_.str();
  const auto t = read_csv(dir_ / "run" / "trace.csv");
  ASSERT_EQ(t.size(), 6u);
  const auto j = column(t, "global_loss");
  for (std::size_t r = 2; r < t.size(); ++r) EXPECT_EQ(t[r][j], t[1][j]);
  const auto s = read_json(dir_ / "run" / "summary.json");
  EXPECT_EQ(s["algorithm"], "fedl");
  EXPECT_FALSE(s["diverged"].get<bool>());
  EXPECT_DOUBLE_EQ(s["final_loss"].get<double>(), s["initial_loss"].get<double>());
}

TEST_F(Cli, TrainRunsBothAlgorithmsAndRejectsOthers) {
  const auto data = small_dataset();
  const auto cfg = write("train.json", R"({"eta": 0.5, "K_g": 10, "K_l": 5, "h": 0.01})");
  for (const char* algo : {"fedl", "fedavg"}) {
    const auto out = dir_ / algo;
    EXPECT_EQ(call({"train", "--config", cfg.string(), "--data", data.string(), "--out",
                    out.string(), "--algo", algo}),
              kExitOk)
        << err_.str();
    const auto s = read_json(out / "summary.json");
    EXPECT_LT(s["final_loss"].get<double>(), s["initial_loss"].get<double>()) << algo;
  }
  EXPECT_EQ(call({"train", "--config", cfg.string(), "--data", data.string(), "--out",
                  (dir_ / "x").string(), "--algo", "fedprox"}),
            kExitInputError);
  EXPECT_NE(err_.str().find("fedprox"), std::string::npos);
  EXPECT_EQ(call({"train", "--data", (dir_ / "missing").string(), "--out",
                  (dir_ / "y").string()}),
            kExitInputError);
}

TEST_F(Cli, DivergenceExitsThreeAndKeepsPartialTrace) {
  const auto data = small_dataset();
  const auto cfg = write("train.json", R"({"K_g": 50, "K_l": 20, "h": 50})");
  EXPECT_EQ(call({"train", "--config", cfg.string(), "--data", data.string(), "--out",
                  (dir_ / "run").string(), "--algo", "fedavg"}),
            kExitNumericalFailure);
  const auto t = read_csv(dir_ / "run" / "trace.csv");
  EXPECT_LT(t.size(), 51u);
  const auto s = read_json(dir_ / "run" / "summary.json");
  EXPECT_TRUE(s["diverged"].get<bool>());
  EXPECT_EQ(read_json(dir_ / "run" / "manifest.json")["status"], "diverged");
}

TEST_F(Cli, InvalidThreadCapIsAnInputError) {
  const char* old = std::getenv("FEDL_LAB_THREADS");
  const std::string saved = old ? old : "";
  ::setenv("FEDL_LAB_THREADS", "many", 1);
  EXPECT_EQ(call({"allocate", "--out", dir_.string()}), kExitInputError);
  if (old) {
    ::setenv("FEDL_LAB_THREADS", saved.c_str(), 1);
  } else {
    ::unsetenv("FEDL_LAB_THREADS");
  }
}

TEST_F(Cli, AllocateMediumPricePutsEveryoneInterior) {
  // Holds whenever 0.5 falls in the fully interior band, which most generated
  // instances have; the others pin a heavy UE at a frequency bound.
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = testing::wireless_instance(seed);
    const auto t = wireless::classify_kappa(inst.ues, inst.sys).thresholds;
    if (!(t[1] < 0.5 && 0.5 <= t[2])) continue;
    ++checked;
    const auto path = instance_file(seed);
    ASSERT_EQ(call({"allocate", "--config", path.string(), "--kappa", "0.5", "--out",
                    dir_.string()}),
              kExitOk)
        << err_.str();
    const auto a = read_csv(dir_ / "allocation.csv");
    ASSERT_EQ(a.size(), 6u);
    for (std::size_t r = 1; r < a.size(); ++r) EXPECT_EQ(a[r][column(a, "subset")], "N3");
    EXPECT_EQ(read_json(dir_ / "summary.json")["region"], "c");
  }
  EXPECT_GE(checked, 5u);
}

TEST_F(Cli, AllocateTinyPriceRunsAtMinimumFrequency) {
  const auto path = instance_file(1);
  const auto inst = wireless::parse_instance(read_file(path));
  ASSERT_EQ(call({"allocate", "--config", path.string(), "--kappa", "1e-6", "--out",
                  dir_.string()}),
            kExitOk);
  const auto t = read_csv(dir_ / "allocation.csv");
  for (std::size_t n = 0; n < inst.ues.size(); ++n) {
    EXPECT_EQ(std::stod(t[n + 1][column(t, "f_star")]), inst.ues[n].f_min);
  }
}

TEST_F(Cli, AllocationOutputPassesKktAfterReload) {
  for (const char* kappa : {"0.001", "0.2", "5", "200"}) {
    ASSERT_EQ(call({"allocate", "--seed", "7", "--kappa", kappa, "--out", dir_.string()}),
              kExitOk);
    const auto inst = wireless::parse_instance(read_file(dir_ / "instance.json"));
    const auto t = read_csv(dir_ / "allocation.csv");
    const auto s = read_json(dir_ / "summary.json");
    wireless::Sub1Solution s1;
    wireless::Sub2Solution s2;
    s1.T_cp_star = s["T_cp_star"].get<double>();
    s2.T_co_star = s["T_co_star"].get<double>();
    for (std::size_t r = 1; r < t.size(); ++r) {
      s1.f_star.push_back(std::stod(t[r][column(t, "f_star")]));
      s2.tau_star.push_back(std::stod(t[r][column(t, "tau_star")]));
    }
    const double k = std::stod(kappa);
    auto sys = inst.sys;
    sys.kappa = k;
    EXPECT_LT(wireless::kkt_check_sub1(s1, inst.ues, sys, k).max_residual(), 1e-6) << kappa;
    EXPECT_LT(wireless::kkt_check_sub2(s2, inst.ues, sys, k).max_residual(), 1e-6) << kappa;
    for (const char* key : {"T_co_star", "theta_star", "eta_star", "Theta", "objective",
                            "region", "L_cp", "L_co"}) {
      EXPECT_TRUE(s.contains(key)) << key;
    }
  }
}

TEST_F(Cli, ParetoFrontierIsMonotone) {
  const auto inst = instance_file(2);
  ASSERT_EQ(call({"pareto", "--config", inst.string(), "--kappa-grid", "1e-3:1e2:20:log",
                  "--out", dir_.string()}),
            kExitOk)
      << err_.str();
  const auto t = read_csv(dir_ / "frontier.csv");
  ASSERT_EQ(t.size(), 21u);
  const auto jt = column(t, "total_time");
  const auto je = column(t, "total_energy");
  for (std::size_t r = 2; r < t.size(); ++r) {
    EXPECT_LE(std::stod(t[r][jt]), std::stod(t[r - 1][jt]));
    EXPECT_GE(std::stod(t[r][je]), std::stod(t[r - 1][je]));
  }
}

TEST_F(Cli, SinglePointFrontierMatchesAllocate) {
  const auto inst = instance_file(3);
  ASSERT_EQ(call({"pareto", "--config", inst.string(), "--kappa-grid", "0.3:0.3:1:log",
                  "--out", (dir_ / "p").string()}),
            kExitOk);
  ASSERT_EQ(call({"allocate", "--config", inst.string(), "--kappa", "0.3", "--out",
                  (dir_ / "a").string()}),
            kExitOk);
  const auto t = read_csv(dir_ / "p" / "frontier.csv");
  const auto s = read_json(dir_ / "a" / "summary.json");
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(std::stod(t[1][column(t, "objective")]), s["objective"].get<double>());
  EXPECT_EQ(std::stod(t[1][column(t, "total_time")]), s["total_time"].get<double>());
  EXPECT_EQ(std::stod(t[1][column(t, "Theta")]), s["Theta"].get<double>());
}

TEST_F(Cli, EmptyOrMissingGridIsAnInputError) {
  EXPECT_EQ(call({"pareto", "--kappa-grid", "1:10:0:log", "--out", dir_.string()}),
            kExitInputError);
  EXPECT_EQ(call({"pareto", "--out", dir_.string()}), kExitInputError);
  EXPECT_FALSE(fs::exists(dir_ / "frontier.csv"));
}

TEST_F(Cli, MalformedInstanceIsAnInputError) {
  const auto bad = write("bad.json", R"({"system": {"B": -1}, "ues": []})");
  EXPECT_EQ(call({"allocate", "--config", bad.string(), "--out", dir_.string()}),
            kExitInputError);
  EXPECT_EQ(call({"allocate", "--config", (dir_ / "nope.json").string(), "--out",
                  dir_.string()}),
            kExitInputError);
}

TEST_F(Cli, UnreachableConvergenceRateIsANumericalFailure) {
  auto inst = testing::wireless_instance(0);
  inst.rho = 100.0;
  inst.consts = fl::LocalSolverConstants::gradient_descent(100.0);
  const auto path = write("hard.json", wireless::instance_to_json(inst));
  EXPECT_EQ(call({"allocate", "--config", path.string(), "--out", dir_.string()}),
            kExitNumericalFailure);
}

}  // namespace
}  // namespace fedl_lab::cli
