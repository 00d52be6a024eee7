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

#include "fedl_lab/wireless/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fedl_lab/errors.hpp"
#include "fedl_lab/parallel.hpp"

namespace fedl_lab::wireless {

FedlAllocation solve_fedl_alloc(std::span<const UEProfile> ues,
                                const SystemParams& sys,
                                const fl::LocalSolverConstants& consts,
                                double rho,
                                const AllocationOptions& options) {
  FedlAllocation out;
  out.sub1 = solve_sub1(ues, sys);
  out.sub2 = solve_sub2(ues, sys);
  out.region = classify_kappa(ues, sys);
  out.sub3 = solve_sub3(out.sub1, out.sub2, consts, rho, sys.kappa,
                        options.sub3);
  out.K_g = fl::k_g_from_ratio(out.sub3.Theta, options.gap0_over_eps);
  const double kl = out.sub3.K_l;
  out.E_g = out.sub2.total_energy + kl * out.sub1.total_energy;
  out.T_g = out.sub2.T_co_star + kl * out.sub1.T_cp_star;
  out.total_energy = out.K_g * out.E_g;
  out.total_time = out.K_g * out.T_g;
  out.objective = out.K_g * (out.E_g + sys.kappa * out.T_g);
  return out;
}

Heterogeneity heterogeneity(std::span<const UEProfile> ues,
                            const SystemParams& sys) {
  validate_instance(ues, sys);
  constexpr double kInf = std::numeric_limits<double>::infinity();
  double max_fast = 0.0, min_slow = kInf;
  double max_tau_min = 0.0, min_tau_max = kInf;
  for (const auto& ue : ues) {
    max_fast = std::max(max_fast, ue.load() / ue.f_max);
    min_slow = std::min(min_slow, ue.load() / ue.f_min);
    const TauBounds tb = tau_bounds(ue, sys);
    max_tau_min = std::max(max_tau_min, tb.tau_min);
    min_tau_max = std::min(min_tau_max, tb.tau_max);
  }
  return {max_fast / min_slow, max_tau_min / min_tau_max};
}

std::vector<ParetoPoint> pareto_sweep(std::span<const UEProfile> ues,
                                      const SystemParams& sys,
                                      const fl::LocalSolverConstants& consts,
                                      double rho,
                                      std::span<const double> kappa_grid,
                                      const AllocationOptions& options) {
  if (kappa_grid.empty()) throw InvalidInputError("empty kappa grid");
  std::vector<ParetoPoint> points(kappa_grid.size());
  parallel_for(kappa_grid.size(), [&](std::size_t k) {
    SystemParams s = sys;
    s.kappa = kappa_grid[k];
    const FedlAllocation a = solve_fedl_alloc(ues, s, consts, rho, options);
    points[k] = {s.kappa,         a.total_time, a.total_energy,
                 a.sub3.theta_star, a.sub3.eta_star, a.sub3.Theta,
                 a.objective};
  });
  return points;
}

std::vector<double> log_grid(double lo, double hi, std::size_t count) {
  if (count == 0) throw InvalidInputError("grid needs at least one point");
  if (!(lo > 0.0) || !(hi >= lo)) {
    throw InvalidInputError("log grid needs 0 < lo <= hi");
  }
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  const double a = std::log(lo), b = std::log(hi);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = std::exp(a + (b - a) * static_cast<double>(i) /
                              static_cast<double>(count - 1));
  }
  out.back() = hi;
  out.front() = lo;
  return out;
}

}  // namespace fedl_lab::wireless
