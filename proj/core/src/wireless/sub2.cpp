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

#include "fedl_lab/wireless/sub2.hpp"

#include <algorithm>

namespace fedl_lab::wireless {

double optimal_tau(const UEProfile& ue, const SystemParams& sys, double kappa,
                   TauCase* which) {
  const TauBounds tb = tau_bounds(ue, sys);
  TauCase c = TauCase::kInterior;
  double tau = 0.0;
  if (kappa <= g_inv(ue, sys, tb.tau_max)) {
    c = TauCase::kAtMax;
    tau = tb.tau_max;
  } else if (kappa >= g_inv(ue, sys, tb.tau_min)) {
    c = TauCase::kAtMin;
    tau = tb.tau_min;
  } else {
    tau = std::clamp(g_fn(ue, sys, kappa), tb.tau_min, tb.tau_max);
  }
  if (which) *which = c;
  return tau;
}

Sub2Solution solve_sub2(std::span<const UEProfile> ues,
                        const SystemParams& sys) {
  validate_instance(ues, sys);
  Sub2Solution sol;
  const std::size_t n = ues.size();
  sol.tau_star.resize(n);
  sol.cases.resize(n);
  sol.energy_co.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    sol.tau_star[i] = optimal_tau(ues[i], sys, sys.kappa, &sol.cases[i]);
    sol.energy_co[i] = energy_co(ues[i], sys, sol.tau_star[i]);
    sol.T_co_star += sol.tau_star[i];
    sol.total_energy += sol.energy_co[i];
  }
  sol.objective = sol.total_energy + sys.kappa * sol.T_co_star;
  return sol;
}

}  // namespace fedl_lab::wireless
