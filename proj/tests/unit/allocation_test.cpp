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

#include <cmath>

#include "fedl_lab/errors.hpp"
#include "fedl_lab/wireless/allocation.hpp"
#include "fedl_lab/wireless/instance.hpp"
#include "support/fixtures.hpp"

namespace fedl_lab::wireless {
namespace {

TEST(Allocation, ObjectiveReassemblesFromParts) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto inst = testing::wireless_instance(seed, 0.7);
    AllocationOptions opt;
    opt.gap0_over_eps = 50.0;
    const auto a = solve_fedl_alloc(inst.ues, inst.sys, inst.consts, inst.rho, opt);
    const double K_g = std::log(50.0) / a.sub3.Theta;
    const double K_l = 2.0 / inst.consts.gamma * std::log(inst.consts.C() / a.sub3.theta_star);
    double e_cp = 0, e_co = 0;
    for (std::size_t n = 0; n < inst.ues.size(); ++n) {
      e_cp += energy_cp(inst.ues[n], a.sub1.f_star[n]);
      e_co += energy_co(inst.ues[n], inst.sys, a.sub2.tau_star[n]);
    }
    const double E_g = e_co + K_l * e_cp;
    const double T_g = a.sub2.T_co_star + K_l * a.sub1.T_cp_star;
    const double expected = K_g * (E_g + 0.7 * T_g);
    EXPECT_NEAR(a.objective, expected, 1e-9 * expected);
    EXPECT_NEAR(a.total_time, K_g * T_g, 1e-9 * K_g * T_g);
    EXPECT_NEAR(a.total_energy, K_g * E_g, 1e-9 * K_g * E_g);
    // With the default unit log factor the SUB3 objective is the total.
    const auto b = solve_fedl_alloc(inst.ues, inst.sys, inst.consts, inst.rho);
    EXPECT_NEAR(b.objective, b.sub3.objective, 1e-12 * b.objective);
  }
}

TEST(Allocation, FirstTwoStagesIgnoreLearningParameters) {
  const auto inst = testing::wireless_instance(3, 0.4);
  const auto a = solve_fedl_alloc(inst.ues, inst.sys, inst.consts, 1.4);
  const auto b = solve_fedl_alloc(inst.ues, inst.sys,
                                  fl::LocalSolverConstants::gradient_descent(5.0), 5.0);
  EXPECT_EQ(a.sub1.f_star, b.sub1.f_star);
  EXPECT_EQ(a.sub2.tau_star, b.sub2.tau_star);
  EXPECT_NE(a.sub3.theta_star, b.sub3.theta_star);
}

TEST(Allocation, LargerUpdatesCostMoreUplinkOnly) {
  auto inst = testing::wireless_instance(4, 0.4);
  const auto a = solve_fedl_alloc(inst.ues, inst.sys, inst.consts, inst.rho);
  for (auto& ue : inst.ues) ue.s_n *= 2;
  const auto b = solve_fedl_alloc(inst.ues, inst.sys, inst.consts, inst.rho);
  EXPECT_GT(b.sub2.total_energy, a.sub2.total_energy);
  EXPECT_GT(b.sub2.T_co_star, a.sub2.T_co_star);
  EXPECT_EQ(a.sub1.f_star, b.sub1.f_star);
  EXPECT_EQ(a.sub1.T_cp_star, b.sub1.T_cp_star);
}

TEST(Heterogeneity, IdenticalUes) {
  auto inst = testing::wireless_instance(5);
  for (auto& ue : inst.ues) ue = inst.ues.front();
  const auto h = heterogeneity(inst.ues, inst.sys);
  const auto& ue = inst.ues.front();
  const auto tb = tau_bounds(ue, inst.sys);
  EXPECT_DOUBLE_EQ(h.L_cp, ue.f_min / ue.f_max);
  EXPECT_DOUBLE_EQ(h.L_co, tb.tau_min / tb.tau_max);
}

TEST(Heterogeneity, BiggerDatasetRaisesComputationRatio) {
  auto inst = testing::wireless_instance(6);
  const double before = heterogeneity(inst.ues, inst.sys).L_cp;
  std::size_t heaviest = 0;
  for (std::size_t n = 1; n < inst.ues.size(); ++n) {
    if (inst.ues[n].load() / inst.ues[n].f_max >
        inst.ues[heaviest].load() / inst.ues[heaviest].f_max) {
      heaviest = n;
    }
  }
  inst.ues[heaviest].D_n *= 10;
  EXPECT_GT(heterogeneity(inst.ues, inst.sys).L_cp, before);
}

TEST(Pareto, TimeFallsAndEnergyRisesWithPrice) {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto inst = testing::wireless_instance(seed);
    const auto grid = log_grid(1e-3, 1e2, 20);
    const auto pts = pareto_sweep(inst.ues, inst.sys, inst.consts, inst.rho, grid);
    ASSERT_EQ(pts.size(), 20u);
    for (std::size_t k = 0; k < pts.size(); ++k) {
      EXPECT_EQ(pts[k].kappa, grid[k]);
      EXPECT_GT(pts[k].total_time, 0.0);
      EXPECT_GT(pts[k].total_energy, 0.0);
      if (k > 0) {
        EXPECT_LE(pts[k].total_time, pts[k - 1].total_time * (1 + 1e-9));
        EXPECT_GE(pts[k].total_energy, pts[k - 1].total_energy * (1 - 1e-9));
      }
    }
  }
}

TEST(Pareto, SinglePointMatchesAllocation) {
  auto inst = testing::wireless_instance(7);
  const double kappa[] = {0.3};
  const auto pts = pareto_sweep(inst.ues, inst.sys, inst.consts, inst.rho, kappa);
  inst.sys.kappa = 0.3;
  const auto a = solve_fedl_alloc(inst.ues, inst.sys, inst.consts, inst.rho);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0].total_time, a.total_time);
  EXPECT_EQ(pts[0].total_energy, a.total_energy);
  EXPECT_EQ(pts[0].objective, a.objective);
}

TEST(Pareto, EmptyGridIsRejected) {
  const auto inst = testing::wireless_instance(8);
  EXPECT_THROW(pareto_sweep(inst.ues, inst.sys, inst.consts, inst.rho, {}),
               InvalidInputError);
}

TEST(LogGrid, EndpointsAndSpacing) {
  const auto g = log_grid(1e-3, 1e3, 7);
  EXPECT_EQ(g.front(), 1e-3);
  EXPECT_EQ(g.back(), 1e3);
  for (std::size_t k = 1; k < g.size(); ++k) EXPECT_NEAR(g[k] / g[k - 1], 10.0, 1e-9);
  EXPECT_THROW(log_grid(0.0, 1.0, 3), InvalidInputError);
  EXPECT_THROW(log_grid(1.0, 2.0, 0), InvalidInputError);
}

}  // namespace
}  // namespace fedl_lab::wireless
