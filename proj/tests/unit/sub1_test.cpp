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

#include <algorithm>
#include <cmath>

#include "fedl_lab/wireless/allocation.hpp"
#include "fedl_lab/wireless/sub1.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace fedl_lab::wireless {
namespace {

double min_alpha_fmin3(const std::vector<UEProfile>& ues) {
  double m = INFINITY;
  for (const auto& ue : ues) m = std::min(m, ue.alpha_n * std::pow(ue.f_min, 3));
  return m;
}

void expect_feasible(const Sub1Solution& s, const std::vector<UEProfile>& ues) {
  for (std::size_t n = 0; n < ues.size(); ++n) {
    EXPECT_GE(s.f_star[n], ues[n].f_min);
    EXPECT_LE(s.f_star[n], ues[n].f_max);
    EXPECT_LE(time_cp(ues[n], s.f_star[n]), s.T_cp_star * (1 + 1e-9));
  }
  EXPECT_NEAR(s.T_cp_star, std::max({s.T_n1, s.T_n2, s.T_n3}),
              1e-12 * s.T_cp_star);
}

TEST(Sub1, TinyPriceRunsEveryoneAtMinimumFrequency) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto inst = testing::wireless_instance(seed);
    inst.sys.kappa = 0.5 * min_alpha_fmin3(inst.ues);
    const auto s = solve_sub1(inst.ues, inst.sys);
    double slowest = 0.0;
    for (std::size_t n = 0; n < inst.ues.size(); ++n) {
      EXPECT_EQ(s.f_star[n], inst.ues[n].f_min);
      slowest = std::max(slowest, time_cp(inst.ues[n], inst.ues[n].f_min));
    }
    EXPECT_DOUBLE_EQ(s.T_cp_star, slowest);
    EXPECT_TRUE(s.partition.n1.empty());
    EXPECT_TRUE(s.partition.n3.empty());
    expect_feasible(s, inst.ues);
  }
}

TEST(Sub1, HighPricePinsBottleneckAtMaximumFrequency) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto inst = testing::wireless_instance(seed);
    const auto info = classify_kappa(inst.ues, inst.sys);
    inst.sys.kappa = 1.5 * info.thresholds[2];
    const auto s = solve_sub1(inst.ues, inst.sys);
    double t_n1 = 0.0;
    for (const auto& ue : inst.ues) t_n1 = std::max(t_n1, time_cp(ue, ue.f_max));
    ASSERT_FALSE(s.partition.n1.empty());
    EXPECT_DOUBLE_EQ(s.T_cp_star, t_n1);
    for (auto n : s.partition.n1) EXPECT_EQ(s.f_star[n], inst.ues[n].f_max);
    expect_feasible(s, inst.ues);
  }
}

TEST(Sub1, MatchesGridOracle) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    for (double kappa : {0.001, 0.05, 0.5, 5.0}) {
      auto inst = testing::wireless_instance(seed);
      inst.sys.kappa = kappa;
      const auto s = solve_sub1(inst.ues, inst.sys);
      const double oracle = testing::sub1_grid_oracle(inst.ues, kappa);
      EXPECT_LE(s.objective, oracle * (1 + 1e-12));
      EXPECT_NEAR(s.objective, oracle, 1e-3 * oracle)
          << "seed " << seed << " kappa " << kappa;
      expect_feasible(s, inst.ues);
    }
  }
}

TEST(Sub1, ObjectiveIsEnergyPlusWeightedDeadline) {
  const auto inst = testing::wireless_instance(1, 0.3);
  const auto s = solve_sub1(inst.ues, inst.sys);
  double e = 0.0;
  for (std::size_t n = 0; n < inst.ues.size(); ++n) e += energy_cp(inst.ues[n], s.f_star[n]);
  EXPECT_NEAR(s.total_energy, e, 1e-14 * e);
  EXPECT_NEAR(s.objective, e + 0.3 * s.T_cp_star, 1e-14 * s.objective);
}

TEST(Sub1, FrequenciesAreMonotoneInPrice) {
  auto inst = testing::wireless_instance(7);
  std::vector<double> prev(inst.ues.size(), 0.0);
  for (double kappa : log_grid(1e-4, 1e2, 80)) {
    inst.sys.kappa = kappa;
    const auto s = solve_sub1(inst.ues, inst.sys);
    for (std::size_t n = 0; n < prev.size(); ++n) {
      EXPECT_GE(s.f_star[n], prev[n] * (1 - 1e-12));
      prev[n] = s.f_star[n];
    }
  }
}

TEST(Regions, ThresholdsAreOrdered) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto inst = testing::wireless_instance(seed);
    const auto t = classify_kappa(inst.ues, inst.sys).thresholds;
    EXPECT_LE(t[0], t[1]);
    EXPECT_LE(t[1], t[2]);
    if (heterogeneity(inst.ues, inst.sys).L_cp < 1.0) {
      EXPECT_LT(t[0], t[1]) << "seed " << seed;
      EXPECT_LT(t[1], t[2]) << "seed " << seed;
    }
  }
}

TEST(Regions, EqualLoadsSkipRegionB) {
  // Same c D and f_min everywhere: every UE leaves f_min at the same price,
  // so regions a and c touch, and f_max > f_min keeps region c non-empty.
  auto inst = testing::wireless_instance(2);
  for (auto& ue : inst.ues) {
    ue.c_n = 20;
    ue.D_n = 6e7;
  }
  const auto t = classify_kappa(inst.ues, inst.sys).thresholds;
  EXPECT_NEAR(t[0], 5 * min_alpha_fmin3(inst.ues), 1e-9 * t[0]);
  EXPECT_EQ(t[0], t[1]);
  EXPECT_LT(t[1], t[2]);
  inst.sys.kappa = std::sqrt(t[1] * t[2]);
  const auto s = solve_sub1(inst.ues, inst.sys);
  EXPECT_EQ(s.partition.n3.size(), 5u);
}

TEST(Regions, ExtremesClassifyAsAAndD) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto inst = testing::wireless_instance(seed);
    inst.sys.kappa = 0.99 * min_alpha_fmin3(inst.ues);
    EXPECT_EQ(classify_kappa(inst.ues, inst.sys).region, Region::kA);
    inst.sys.kappa = 1.01 * classify_kappa(inst.ues, inst.sys).thresholds[2];
    EXPECT_EQ(classify_kappa(inst.ues, inst.sys).region, Region::kD);
  }
}

TEST(Regions, AgreeWithSolutionPartition) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto inst = testing::wireless_instance(seed);
    for (double kappa : log_grid(1e-4, 1e3, 60)) {
      inst.sys.kappa = kappa;
      const auto s = solve_sub1(inst.ues, inst.sys);
      EXPECT_EQ(classify_kappa(inst.ues, inst.sys).region,
                region_of(s.partition, inst.ues.size()))
          << "seed " << seed << " kappa " << kappa;
    }
  }
}

TEST(Partition, LiteralProcedureAgreesOnTypicalInstances) {
  std::size_t agree = 0, total = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto inst = testing::wireless_instance(seed);
    for (double kappa : {0.001, 0.05, 0.5, 5.0}) {
      inst.sys.kappa = kappa;
      const auto raw = partition_ues(inst.ues, kappa);
      const auto s = solve_sub1(inst.ues, inst.sys);
      agree += region_of(raw, 5) == region_of(s.partition, 5);
      ++total;
    }
  }
  EXPECT_GE(agree, total * 9 / 10);
}

TEST(Partition, LiteralProcedureCanPinBottleneckNeedlessly) {
  // UE 1 seeds N1 although the optimal deadline is UE 0's time at f_min,
  // which UE 1 meets at an interior frequency.
  UEProfile a{1, 30, 1, 30, 300, 1e-8, 0.2, 1, 25000};
  UEProfile b{1, 3, 1, 0.3, 5, 1e-8, 0.2, 1, 25000};
  const std::vector<UEProfile> ues{a, b};
  SystemParams sys{1e6, 1e-10, 1000, 2};
  const auto raw = partition_ues(ues, 1000);
  EXPECT_EQ(raw.n1, std::vector<std::size_t>{1});
  EXPECT_EQ(raw.n2, std::vector<std::size_t>{0});

  const auto s = solve_sub1(ues, sys);
  EXPECT_TRUE(s.partition.n1.empty());
  EXPECT_DOUBLE_EQ(s.T_cp_star, 1.0);
  EXPECT_DOUBLE_EQ(s.f_star[1], 3.0);
  const double raw_objective = energy_cp(a, 30) + energy_cp(b, 5) + 1000 * 1.0;
  EXPECT_LT(s.objective, raw_objective);
  EXPECT_NEAR(s.objective, testing::sub1_grid_oracle(ues, 1000), 1e-3 * s.objective);
}

TEST(Partition, DeadlineOfEmptySetIsZero) {
  const auto inst = testing::wireless_instance(0);
  EXPECT_EQ(deadline_n3(inst.ues, {}, 1.0), 0.0);
  const std::size_t all[] = {0, 1, 2, 3, 4};
  double sum = 0.0;
  for (const auto& ue : inst.ues) sum += ue.alpha_n * std::pow(ue.load(), 3);
  EXPECT_NEAR(deadline_n3(inst.ues, all, 2.0), std::cbrt(sum / 2.0), 1e-12);
}

}  // namespace
}  // namespace fedl_lab::wireless
