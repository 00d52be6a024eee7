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

#include <span>
#include <vector>

#include "fedl_lab/wireless/sub1.hpp"
#include "fedl_lab/wireless/sub2.hpp"

namespace fedl_lab::wireless {

// Worst relative violations of the KKT system at a candidate point. All
// entries are dimensionless; an optimal point reports values near rounding.
struct KktReport {
  double stationarity = 0.0;
  double primal_feasibility = 0.0;
  double dual_feasibility = 0.0;
  double complementary_slackness = 0.0;
  // SUB1: deadline multiplier per UE. SUB2: the single time-budget
  // multiplier, which stationarity in T_co fixes to kappa.
  std::vector<double> lambda;

  double max_residual() const;
};

// Multipliers are rebuilt from the point: an interior UE on the deadline has
// lambda = alpha f^3, a UE on the deadline at f_min may take any value in
// [0, alpha f_min^3], one at f_max any value >= alpha f_max^3, and an
// off-deadline UE has lambda = 0. The free ones are chosen so that
// sum lambda = kappa when that is possible.
KktReport kkt_check_sub1(const Sub1Solution& sol,
                         std::span<const UEProfile> ues,
                         const SystemParams& sys, double kappa);

KktReport kkt_check_sub2(const Sub2Solution& sol,
                         std::span<const UEProfile> ues,
                         const SystemParams& sys, double kappa);

}  // namespace fedl_lab::wireless
