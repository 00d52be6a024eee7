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

#include "fedl_lab/wireless/sub1.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fedl_lab/errors.hpp"

namespace fedl_lab::wireless {

namespace {

struct Loads {
  std::vector<double> cube;      // alpha (c D)^3
  std::vector<double> t_min_f;   // c D / f_min
  std::vector<double> t_max_f;   // c D / f_max
  std::vector<std::size_t> by_t_min_f;  // ascending c D / f_min
  double t_n1 = 0.0;             // max c D / f_max
};

Loads compute_loads(std::span<const UEProfile> ues) {
  Loads out;
  const std::size_t n = ues.size();
  out.cube.resize(n);
  out.t_min_f.resize(n);
  out.t_max_f.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double l = ues[i].load();
    out.cube[i] = ues[i].alpha_n * l * l * l;
    out.t_min_f[i] = l / ues[i].f_min;
    out.t_max_f[i] = l / ues[i].f_max;
    out.t_n1 = std::max(out.t_n1, out.t_max_f[i]);
  }
  out.by_t_min_f.resize(n);
  std::iota(out.by_t_min_f.begin(), out.by_t_min_f.end(), std::size_t{0});
  std::stable_sort(out.by_t_min_f.begin(), out.by_t_min_f.end(),
                   [&](std::size_t a, std::size_t b) {
                     return out.t_min_f[a] < out.t_min_f[b];
                   });
  return out;
}

}  // namespace

double deadline_n3(std::span<const UEProfile> ues,
                   std::span<const std::size_t> set, double kappa) {
  double sum = 0.0;
  for (std::size_t i : set) {
    const double l = ues[i].load();
    sum += ues[i].alpha_n * l * l * l;
  }
  return set.empty() ? 0.0 : std::cbrt(sum / kappa);
}

Partition partition_ues(std::span<const UEProfile> ues, double kappa) {
  if (ues.empty()) throw InvalidInputError("instance has no UEs");
  if (!(kappa > 0.0)) throw InvalidInputError("kappa must be > 0");
  const Loads loads = compute_loads(ues);
  const std::size_t n = ues.size();
  std::vector<char> in_n1(n, 0), in_n2(n, 0);

  auto n3_members = [&] {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i) {
      if (!in_n1[i] && !in_n2[i]) out.push_back(i);
    }
    return out;
  };
  double t3 = deadline_n3(ues, n3_members(), kappa);
  bool n1_seeded = false;
  for (std::size_t i : loads.by_t_min_f) {
    if (!n1_seeded && loads.t_n1 >= t3 && t3 > 0.0) {
      for (std::size_t m = 0; m < n; ++m) {
        if (loads.t_max_f[m] == loads.t_n1) in_n1[m] = 1;
      }
      n1_seeded = true;
      t3 = deadline_n3(ues, n3_members(), kappa);
    }
    if (!in_n1[i] && loads.t_min_f[i] <= t3) {
      in_n2[i] = 1;
      t3 = deadline_n3(ues, n3_members(), kappa);
    }
  }

  Partition p;
  for (std::size_t i = 0; i < n; ++i) {
    (in_n1[i] ? p.n1 : in_n2[i] ? p.n2 : p.n3).push_back(i);
  }
  return p;
}

Sub1Solution solve_sub1(std::span<const UEProfile> ues,
                        const SystemParams& sys) {
  validate_instance(ues, sys);
  const double kappa = sys.kappa;
  const Loads loads = compute_loads(ues);
  const auto& order = loads.by_t_min_f;
  const std::size_t n = ues.size();

  // Minimize sum_n E_n(T) + kappa T over T, where UE n runs at
  // max(f_min, cD/T). On [b_{j-1}, b_j] (b = cD/f_min ascending) the UEs
  // with b > T are the ones above j, and the stationary point is the cube
  // root of their summed alpha (cD)^3 over kappa.
  std::vector<double> suffix(n + 1, 0.0);
  for (std::size_t j = n; j-- > 0;) {
    suffix[j] = suffix[j + 1] + loads.cube[order[j]];
  }
  double t_hat = loads.t_min_f[order[n - 1]];
  for (std::size_t j = 0; j < n; ++j) {
    const double tj = std::cbrt(suffix[j] / kappa);
    const double upper = loads.t_min_f[order[j]];
    if (tj <= upper) {
      const double lower = j == 0 ? 0.0 : loads.t_min_f[order[j - 1]];
      t_hat = std::max(tj, lower);
      break;
    }
  }

  Sub1Solution sol;
  const bool bottleneck = loads.t_n1 > t_hat;
  sol.T_cp_star = bottleneck ? loads.t_n1 : t_hat;
  sol.f_star.resize(n);
  sol.energy_cp.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ue = ues[i];
    if (bottleneck && loads.t_max_f[i] == loads.t_n1) {
      sol.partition.n1.push_back(i);
      sol.f_star[i] = ue.f_max;
    } else if (loads.t_min_f[i] <= sol.T_cp_star) {
      sol.partition.n2.push_back(i);
      sol.f_star[i] = ue.f_min;
      sol.T_n2 = std::max(sol.T_n2, loads.t_min_f[i]);
    } else {
      sol.partition.n3.push_back(i);
      sol.f_star[i] =
          std::clamp(ue.load() / sol.T_cp_star, ue.f_min, ue.f_max);
    }
    sol.energy_cp[i] = energy_cp(ue, sol.f_star[i]);
    sol.total_energy += sol.energy_cp[i];
  }
  sol.T_n1 = sol.partition.n1.empty() ? 0.0 : loads.t_n1;
  sol.T_n3 = deadline_n3(ues, sol.partition.n3, kappa);
  sol.objective = sol.total_energy + kappa * sol.T_cp_star;
  return sol;
}

std::string_view to_string(Region r) {
  switch (r) {
    case Region::kA:
      return "a";
    case Region::kB:
      return "b";
    case Region::kC:
      return "c";
    case Region::kD:
      return "d";
  }
  return "?";
}

RegionInfo classify_kappa(std::span<const UEProfile> ues,
                          const SystemParams& sys) {
  validate_instance(ues, sys);
  const Loads loads = compute_loads(ues);
  const double t2_min = loads.t_min_f[loads.by_t_min_f.front()];
  const double t2_max = loads.t_min_f[loads.by_t_min_f.back()];

  double argmax_cube = 0.0;
  double total_cube = 0.0;
  double above_n1_cube = 0.0;
  for (std::size_t i = 0; i < ues.size(); ++i) {
    total_cube += loads.cube[i];
    if (loads.t_min_f[i] == t2_max) argmax_cube += loads.cube[i];
    if (loads.t_min_f[i] > loads.t_n1) above_n1_cube += loads.cube[i];
  }
  auto cube = [](double t) { return t * t * t; };

  // k1: the slowest UEs leave f_min. k2: the fastest UE leaves f_min.
  // k3: the bottleneck deadline starts to bind.
  const double k3 = above_n1_cube / cube(loads.t_n1);
  const double k1 = std::min(argmax_cube / cube(t2_max), k3);
  const double k2 = std::clamp(total_cube / cube(t2_min), k1, k3);

  RegionInfo info;
  info.thresholds = {k1, k2, k3};
  const double kappa = sys.kappa;
  info.region = kappa <= k1   ? Region::kA
                : kappa <= k2 ? Region::kB
                : kappa <= k3 ? Region::kC
                              : Region::kD;
  return info;
}

Region region_of(const Partition& p, std::size_t n_ues) {
  if (!p.n1.empty()) return Region::kD;
  if (p.n3.empty()) return Region::kA;
  if (p.n2.empty() && p.n3.size() == n_ues) return Region::kC;
  return Region::kB;
}

}  // namespace fedl_lab::wireless
