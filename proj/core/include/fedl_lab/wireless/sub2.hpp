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

#include "fedl_lab/wireless/ue_model.hpp"

namespace fedl_lab::wireless {

enum class TauCase { kAtMax, kInterior, kAtMin };

struct Sub2Solution {
  std::vector<double> tau_star;    // s
  std::vector<TauCase> cases;
  double T_co_star = 0.0;          // sum of tau_star
  std::vector<double> energy_co;   // J
  double total_energy = 0.0;
  double objective = 0.0;          // total_energy + kappa T_co_star
};

// Per-UE minimizer of energy_co(tau) + kappa tau on [tau_min, tau_max]:
// tau_max when kappa <= g_inv(tau_max), tau_min when kappa >= g_inv(tau_min),
// g_fn(kappa) otherwise.
double optimal_tau(const UEProfile& ue, const SystemParams& sys, double kappa,
                   TauCase* which = nullptr);

Sub2Solution solve_sub2(std::span<const UEProfile> ues,
                        const SystemParams& sys);

}  // namespace fedl_lab::wireless
