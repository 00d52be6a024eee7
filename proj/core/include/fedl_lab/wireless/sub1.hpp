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

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "fedl_lab/wireless/ue_model.hpp"

namespace fedl_lab::wireless {

// N1: bottleneck UEs at f_max. N2: UEs finishing early at f_min.
// N3: UEs at an interior frequency that exactly meets the deadline.
struct Partition {
  std::vector<std::size_t> n1;
  std::vector<std::size_t> n2;
  std::vector<std::size_t> n3;
};

struct Sub1Solution {
  std::vector<double> f_star;     // Hz
  double T_cp_star = 0.0;         // s
  Partition partition;
  std::vector<double> energy_cp;  // J per local round
  double total_energy = 0.0;      // sum of energy_cp
  double objective = 0.0;         // total_energy + kappa T_cp_star
  // Subset deadlines; 0 for an empty subset.
  double T_n1 = 0.0;
  double T_n2 = 0.0;
  double T_n3 = 0.0;
};

// The subset-forming procedure taken literally: UEs sorted by c D / f_min,
// N1 seeded with every argmax of c D / f_max once that value reaches the
// running T_N3, N2 absorbing UEs with c D / f_min <= T_N3. A UE already in
// N1 is never moved to N2.
Partition partition_ues(std::span<const UEProfile> ues, double kappa);

// T_N3 = (sum_{n in set} alpha (c D)^3 / kappa)^(1/3); 0 for an empty set.
double deadline_n3(std::span<const UEProfile> ues,
                   std::span<const std::size_t> set, double kappa);

// Optimal CPU frequencies minimizing sum energy_cp + kappa T_cp subject to
// c D / f_n <= T_cp and f_min <= f_n <= f_max. The deadline is the larger of
// the bottleneck time max c D / f_max and the stationary deadline over the
// UEs not pinned at f_min; each f_n is c D / T clamped to its range. The
// partition reports where each UE landed.
Sub1Solution solve_sub1(std::span<const UEProfile> ues,
                        const SystemParams& sys);

enum class Region { kA, kB, kC, kD };

std::string_view to_string(Region r);

// Region a: every UE at f_min. b: N1 empty, N2 and N3 non-empty. c: every
// UE interior. d: N1 non-empty. The boundaries satisfy
// k1 <= k2 <= k3 (strict when a fully interior regime exists) and
// region(kappa) = a for kappa <= k1, b for k1 < kappa <= k2,
// c for k2 < kappa <= k3, d beyond.
struct RegionInfo {
  Region region = Region::kA;
  std::array<double, 3> thresholds{};
};

RegionInfo classify_kappa(std::span<const UEProfile> ues,
                          const SystemParams& sys);

// Region implied by a partition's emptiness pattern.
Region region_of(const Partition& p, std::size_t n_ues);

}  // namespace fedl_lab::wireless
