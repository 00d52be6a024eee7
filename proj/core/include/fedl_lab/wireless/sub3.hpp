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

#include <cstddef>

#include "fedl_lab/fl/rates.hpp"
#include "fedl_lab/wireless/sub1.hpp"
#include "fedl_lab/wireless/sub2.hpp"

namespace fedl_lab::wireless {

// Per-round costs entering the (theta, eta) problem.
struct RoundCosts {
  double E_co = 0.0;  // J per global round, uplink
  double T_co = 0.0;  // s
  double E_cp = 0.0;  // J per local iteration, all UEs
  double T_cp = 0.0;  // s
};

RoundCosts round_costs(const Sub1Solution& sub1, const Sub2Solution& sub2);

struct Sub3Options {
  double theta_lo = 1e-4;
  double theta_hi = 0.999;
  double eta_lo = 1e-4;
  double eta_hi = 10.0;
  std::size_t grid = 200;     // log-spaced points per axis
  double refine_tol = 1e-6;   // final coordinate step, in log units
};

struct Sub3Solution {
  double theta_star = 0.0;
  double eta_star = 0.0;
  double Theta = 0.0;
  double K_l = 0.0;
  double objective = 0.0;  // cost per unit of ln(gap0/eps)
};

// (1/Theta) (E_co + K_l E_cp + kappa (T_co + K_l T_cp)), or +inf when
// Theta is outside (0, 1).
double sub3_objective(const RoundCosts& costs,
                      const fl::LocalSolverConstants& consts, double rho,
                      double kappa, double theta, double eta);

// Log-spaced grid search over the box followed by coordinate descent in log
// coordinates. Throws InfeasibleError (carrying the largest Theta seen) when
// no grid point has Theta in (0, 1).
Sub3Solution solve_sub3(const Sub1Solution& sub1, const Sub2Solution& sub2,
                        const fl::LocalSolverConstants& consts, double rho,
                        double kappa, const Sub3Options& options = {});

Sub3Solution solve_sub3(const RoundCosts& costs,
                        const fl::LocalSolverConstants& consts, double rho,
                        double kappa, const Sub3Options& options = {});

}  // namespace fedl_lab::wireless
