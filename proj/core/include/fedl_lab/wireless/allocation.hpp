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

#pragma once

#include <numbers>
#include <span>
#include <vector>

#include "fedl_lab/fl/rates.hpp"
#include "fedl_lab/wireless/sub1.hpp"
#include "fedl_lab/wireless/sub2.hpp"
#include "fedl_lab/wireless/sub3.hpp"

namespace fedl_lab::wireless {

struct AllocationOptions {
  double gap0_over_eps = std::numbers::e;  // ln(gap0/eps) = 1 by default
  Sub3Options sub3;
};

struct FedlAllocation {
  Sub1Solution sub1;
  Sub2Solution sub2;
  Sub3Solution sub3;
  RegionInfo region;
  double K_g = 0.0;
  double E_g = 0.0;  // J per global round: E_co + K_l E_cp
  double T_g = 0.0;  // s per global round: T_co + K_l T_cp
  double total_energy = 0.0;  // K_g E_g
  double total_time = 0.0;    // K_g T_g
  double objective = 0.0;     // K_g (E_g + kappa T_g)
};

// SUB1 and SUB2 at sys.kappa, then SUB3 on their costs.
FedlAllocation solve_fedl_alloc(std::span<const UEProfile> ues,
                                const SystemParams& sys,
                                const fl::LocalSolverConstants& consts,
                                double rho,
                                const AllocationOptions& options = {});

struct Heterogeneity {
  double L_cp = 0.0;  // max c D / f_max over min c D / f_min
  double L_co = 0.0;  // max tau_min over min tau_max
};

Heterogeneity heterogeneity(std::span<const UEProfile> ues,
                            const SystemParams& sys);

struct ParetoPoint {
  double kappa = 0.0;
  double total_time = 0.0;
  double total_energy = 0.0;
  double theta = 0.0;
  double eta = 0.0;
  double Theta = 0.0;
  double objective = 0.0;
};

// One full solve per kappa, in parallel; output order follows kappa_grid.
std::vector<ParetoPoint> pareto_sweep(std::span<const UEProfile> ues,
                                      const SystemParams& sys,
                                      const fl::LocalSolverConstants& consts,
                                      double rho,
                                      std::span<const double> kappa_grid,
                                      const AllocationOptions& options = {});

// count log-spaced values from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, std::size_t count);

}  // namespace fedl_lab::wireless
